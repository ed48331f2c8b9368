use clap::{Parser, Subcommand, ValueEnum};
use schubertine::combinat::Group;

#[derive(Parser, Debug)]
#[command(name = "schubertine", version, about = "Theta and eta polynomials, Pieri rules and Stanley functions")]
pub struct Cli {
    /// Output format; only json is lossless.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    A,
    C,
    D,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::A => Group::A,
            GroupArg::C => Group::C,
            GroupArg::D => Group::D,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IsotropicGroup {
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    Schur,
    Theta,
    Eta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Schur,
    Theta,
    Eta,
    /// Stanley function of a permutation.
    #[value(name = "G")]
    G,
    /// Type C mixed Stanley function.
    #[value(name = "J")]
    J,
    /// Type D mixed Stanley function.
    #[value(name = "I")]
    I,
}

fn parse_rect(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected RxC, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad rectangle {s:?}: {e}"));
    Ok((num(r)?, num(c)?))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a Schur, theta or eta polynomial in the special generators.
    Giambelli {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Partition such as 5,2,1; eta accepts a type suffix, e.g. 3,2,2:2.
        #[arg(long)]
        lambda: String,
    },
    /// Multiply a basis element by a special generator.
    Pieri {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        p: usize,
        /// Use the primed generator (type D at positive level).
        #[arg(long)]
        prime: bool,
        /// Keep only shapes inside an RxC rectangle.
        #[arg(long, value_parser = parse_rect)]
        rect: Option<(usize, usize)>,
    },
    /// Truncated power series in z_1..z_M and x_1..x_k.
    Series {
        #[arg(long, value_enum)]
        what: SeriesKind,
        /// Number of z variables.
        #[arg(long)]
        z: usize,
        /// Degree cap; defaults to the weight of the input.
        #[arg(long)]
        deg: Option<u32>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Partition (schur, theta, eta).
        #[arg(long)]
        lambda: Option<String>,
        /// Signed permutation window (G, J, I).
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// Stanley coefficients from the transition tree.
    Stanley {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Window such as 3,-1,2,5,4.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Print the whole tree instead of the coefficients.
        #[arg(long)]
        tree: bool,
    },
    /// Schubert polynomial of a (signed) permutation.
    Schubert {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Rank; defaults to the window length.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Giambelli coefficients on a partial flag manifold.
    FlagCoeffs {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Increasing sequence a_1 < ... < a_p.
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
    },
    /// Index function of a Schubert cell in an isotropic Grassmannian.
    Index {
        #[arg(long, value_enum)]
        group: IsotropicGroup,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Run a verification suite by name, criterion number, or "all".
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_weight: Option<usize>,
    },
}
