//! Typed k-strict partitions.

use std::fmt;

use super::Partition;
use crate::error::{Error, Result};

/// A `k`-strict partition together with its type in `{0, 1, 2}`.
///
/// For `k ≥ 1` the type is 0 exactly when no part equals `k`. At level 0
/// every partition has type 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TypedPartition {
    parts: Partition,
    k: usize,
    ty: u8,
}

impl TypedPartition {
    pub fn new(parts: Partition, k: usize, ty: u8) -> Result<Self> {
        if !parts.is_k_strict(k) {
            return Err(Error::precondition("k-strict", format!("{parts} is not {k}-strict")));
        }
        let legal = if k == 0 {
            ty == 1
        } else if parts.has_part(k) {
            ty == 1 || ty == 2
        } else {
            ty == 0
        };
        if !legal {
            return Err(Error::precondition("type", format!("type {ty} is illegal for {parts} at level {k}")));
        }
        Ok(TypedPartition { parts, k, ty })
    }

    /// The forced type when there is only one legal choice.
    pub fn untyped(parts: Partition, k: usize) -> Result<Self> {
        let ty = if k == 0 {
            1
        } else if parts.has_part(k) {
            return Err(Error::precondition("type", format!("{parts} has a part equal to {k}; a type 1 or 2 is required")));
        } else {
            0
        };
        TypedPartition::new(parts, k, ty)
    }

    /// Every legal type for `parts` at level `k`.
    pub fn all_types(parts: &Partition, k: usize) -> Vec<TypedPartition> {
        [0u8, 1, 2]
            .into_iter()
            .filter_map(|t| TypedPartition::new(parts.clone(), k, t).ok())
            .collect()
    }

    /// Parses `"3,2,2:2"`; a missing suffix means type 0 when that is legal.
    pub fn parse(s: &str, k: usize) -> Result<Self> {
        match s.split_once(':') {
            Some((p, t)) => {
                let ty: u8 = t.trim().parse().map_err(|_| Error::Parse(format!("bad type {t:?}")))?;
                TypedPartition::new(p.parse()?, k, ty)
            }
            None => TypedPartition::untyped(s.parse()?, k),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn parts(&self) -> &[usize] {
        self.parts.parts()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ty(&self) -> u8 {
        self.ty
    }

    pub fn size(&self) -> usize {
        self.parts.size()
    }

    /// Number of parts greater than `k`.
    pub fn ell_k(&self) -> usize {
        self.parts.parts_above(self.k)
    }

    /// Index (0-based) of the first part equal to `k`, if any.
    pub fn first_k_index(&self) -> Option<usize> {
        self.parts.parts().iter().position(|&p| p == self.k)
    }
}

impl fmt::Display for TypedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.parts, self.ty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types_follow_the_level() {
        let p: Partition = "3,2,2".parse().unwrap();
        assert!(TypedPartition::new(p.clone(), 2, 0).is_err());
        assert!(TypedPartition::new(p.clone(), 2, 2).is_ok());
        assert_eq!(TypedPartition::all_types(&p, 2).len(), 2);
        assert_eq!(TypedPartition::all_types(&p, 1).len(), 0);
        assert_eq!(TypedPartition::all_types(&"3,1".parse().unwrap(), 0).len(), 1);
    }

    #[test]
    fn parsing() {
        let t = TypedPartition::parse("3,2,2:2", 2).unwrap();
        assert_eq!(t.ty(), 2);
        assert_eq!(t.to_string(), "3,2,2:2");
        assert_eq!(TypedPartition::parse("3,1", 2).unwrap().ty(), 0);
        assert!(TypedPartition::parse("3,2", 2).is_err());
        assert_eq!(TypedPartition::parse("", 0).unwrap().ty(), 1);
    }
}
