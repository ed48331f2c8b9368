use std::collections::BTreeMap;

use serde_json::{json, Value};

use schubertine::combinat::{index_function, Group, Partition, SignedPermutation, TypedPartition};
use schubertine::freering::{eta_level0, eta_star_expand, theta_polynomial, FreeElement};
use schubertine::pieri::pieri_product;
use schubertine::quotient::{basis_element, BasisExpansion, BasisKind, Label, RingDescriptor};
use schubertine::series::{eta_symmetric, schur_oracle, theta_symmetric, TruncatedSeries};
use schubertine::stanley::{flag_coefficients, nilcoxeter_mixed_stanley, schubert_poly, ShapeLabel, TransitionTree};
use schubertine::verify::{run_suite, Limits};
use schubertine::{Error, Result};

use crate::args::{Command, IsotropicGroup, PolyFamily, SeriesKind};
use crate::render::{expansion_latex, group_name};

/// A computed result in every output format.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub latex: Option<String>,
    /// False when the command ran but reports failure (a failing suite).
    pub ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, latex: None, ok: true }
    }

    fn with_latex(mut self, latex: String) -> Self {
        self.latex = Some(latex);
        self
    }
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Giambelli { family, k, lambda } => giambelli(*family, *k, lambda),
        Command::Pieri { group, k, lambda, p, prime, rect } => pieri((*group).into(), *k, lambda, *p, *prime, *rect),
        Command::Series { what, z, deg, k, lambda, w } => series(*what, *z, *deg, *k, lambda.as_deref(), w.as_deref()),
        Command::Stanley { group, w, k, tree } => stanley(&SignedPermutation::parse(w, (*group).into())?, *k, *tree),
        Command::Schubert { group, w, n } => schubert(&SignedPermutation::parse(w, (*group).into())?, *n),
        Command::FlagCoeffs { group, w, a } => flag_coeffs(&SignedPermutation::parse(w, (*group).into())?, a),
        Command::Index { group, n, k, lambda } => index(*group, *n, *k, lambda),
        Command::Verify { suite, max_weight } => verify(suite, *max_weight),
    }
}

fn polynomial(x: FreeElement) -> Output {
    Output::new(x.to_json(), x.to_string()).with_latex(x.to_latex())
}

fn untyped(s: &str) -> Result<Partition> {
    if s.contains(':') {
        return Err(Error::Parse(format!("{s:?}: a type suffix is only allowed for eta polynomials at positive level")));
    }
    s.parse()
}

fn giambelli(family: PolyFamily, k: usize, lambda: &str) -> Result<Output> {
    let x = match family {
        PolyFamily::Schur => {
            basis_element(&RingDescriptor::Free, BasisKind::Schur, &Label::plain(untyped(lambda)?))?
        }
        PolyFamily::Theta => theta_polynomial(&untyped(lambda)?, k)?,
        PolyFamily::Eta if k == 0 => eta_level0(&untyped(lambda)?)?,
        PolyFamily::Eta => eta_star_expand(&TypedPartition::parse(lambda, k)?)?,
    };
    Ok(polynomial(x))
}

fn pieri(group: Group, k: usize, lambda: &str, p: usize, prime: bool, rect: Option<(usize, usize)>) -> Result<Output> {
    let label = match group {
        Group::D if k > 0 => Label::parse(lambda, &RingDescriptor::B(k))?,
        _ => Label::plain(untyped(lambda)?),
    };
    if prime && !(group == Group::D && k > 0) {
        return Err(Error::precondition("prime", "the primed generator exists only in type D at positive level"));
    }
    let e = pieri_product(&label, p, k, group, prime, rect)?;
    Ok(expansion(&e))
}

fn expansion(e: &BasisExpansion) -> Output {
    let json = e.to_json();
    let latex = expansion_latex(&json);
    Output::new(json, e.to_string()).with_latex(latex)
}

fn series(what: SeriesKind, m: usize, deg: Option<u32>, k: usize, lambda: Option<&str>, w: Option<&str>) -> Result<Output> {
    let need_lambda = || lambda.ok_or_else(|| Error::Parse("--lambda is required for schur, theta and eta".into()));
    let need_w = || w.ok_or_else(|| Error::Parse("--w is required for G, J and I".into()));
    let weight = |p: &Partition| p.size() as u32;
    let s: TruncatedSeries = match what {
        SeriesKind::Schur => {
            let lam = untyped(need_lambda()?)?;
            schur_oracle(&lam)?.to_symmetric(m, deg.unwrap_or(weight(&lam)))?.to_truncated()
        }
        SeriesKind::Theta => {
            let lam = untyped(need_lambda()?)?;
            theta_symmetric(&lam, k, m, deg.unwrap_or(weight(&lam)))?.to_truncated()
        }
        SeriesKind::Eta => {
            let lam = TypedPartition::parse(need_lambda()?, k)?;
            let d = deg.unwrap_or(weight(lam.partition()));
            eta_symmetric(&lam, m, d)?.to_truncated()
        }
        SeriesKind::G | SeriesKind::J | SeriesKind::I => {
            let group = match what {
                SeriesKind::G => Group::A,
                SeriesKind::J => Group::C,
                _ => Group::D,
            };
            if group == Group::A && k > 0 {
                return Err(Error::precondition("level", "G has no x variables; use --k 0"));
            }
            let w = SignedPermutation::parse(need_w()?, group)?;
            let s = nilcoxeter_mixed_stanley(&w, k, m)?;
            match deg {
                Some(d) => s.with_cap(d),
                None => s,
            }
        }
    };
    Ok(Output::new(s.to_json(), s.to_string()))
}

fn label_string((shape, ty): &ShapeLabel) -> String {
    Label { parts: shape.clone(), ty: *ty }.to_string()
}

fn stanley(w: &SignedPermutation, k: usize, tree: bool) -> Result<Output> {
    let t = TransitionTree::new(w, k)?;
    if tree {
        let mut text = String::new();
        write_tree(&t, 0, 0, &mut text);
        return Ok(Output::new(t.to_json(), text.trim_end().to_string()));
    }
    let counts = t.leaf_counts();
    let coeffs: Vec<Value> = counts.iter().map(|(l, c)| json!({"label": label_string(l), "c": c.to_string()})).collect();
    let json = json!({"group": group_name(w.group()), "w": w.window(), "k": t.k(), "coeffs": coeffs});
    let text = counts.iter().map(|(l, c)| format!("{c} [{}]", label_string(l))).collect::<Vec<_>>().join("\n");
    Ok(Output::new(json, text))
}

fn write_tree(t: &TransitionTree, id: usize, depth: usize, out: &mut String) {
    out.push_str(&"  ".repeat(depth));
    out.push_str(&t.node(id).to_string());
    if let Some(l) = t.label(id) {
        out.push_str(&format!("  [{}]", label_string(l)));
    }
    out.push('\n');
    for &c in t.children(id) {
        write_tree(t, c, depth + 1, out);
    }
}

fn schubert(w: &SignedPermutation, n: Option<usize>) -> Result<Output> {
    let n = n.unwrap_or_else(|| w.n());
    Ok(polynomial(schubert_poly(w, n)?))
}

fn flag_coeffs(w: &SignedPermutation, a: &[usize]) -> Result<Output> {
    let coeffs: BTreeMap<Vec<ShapeLabel>, usize> = flag_coefficients(w, a)?;
    let labels = |ls: &[ShapeLabel]| ls.iter().map(label_string).collect::<Vec<_>>();
    let json_terms: Vec<Value> =
        coeffs.iter().map(|(ls, c)| json!({"labels": labels(ls), "c": c.to_string()})).collect();
    let json = json!({"group": group_name(w.group()), "w": w.window(), "a": a, "coeffs": json_terms});
    let text = coeffs
        .iter()
        .map(|(ls, c)| format!("{c} [{}]", labels(ls).join(" | ")))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(json, text))
}

fn index(group: IsotropicGroup, n: usize, k: usize, lambda: &str) -> Result<Output> {
    let (group, lam, ty) = match group {
        IsotropicGroup::C => (Group::C, untyped(lambda)?, None),
        IsotropicGroup::D => match lambda.split_once(':') {
            Some((p, t)) => {
                let ty: u8 = t.trim().parse().map_err(|_| Error::Parse(format!("bad type {t:?}")))?;
                (Group::D, p.parse()?, Some(ty))
            }
            None => (Group::D, lambda.parse()?, None),
        },
    };
    let p = index_function(&lam, ty, n, k, group)?;
    let text = p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Ok(Output::new(json!({ "index": p }), text))
}

fn verify(suite: &str, max_weight: Option<usize>) -> Result<Output> {
    let reports = run_suite(suite, &Limits { max_weight })?;
    let passed = reports.iter().all(|r| r.passed());
    let json = json!({
        "passed": passed,
        "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    let text = reports.iter().map(|r| r.summary_line()).collect::<Vec<_>>().join("\n");
    let mut out = Output::new(json, text);
    out.ok = passed;
    Ok(out)
}
