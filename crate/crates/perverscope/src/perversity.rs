//! Perversity functions on stratum dimensions.
//!
//! A perversity assigns an integer to each dimension `0..=dim`, normalized to
//! `p(0) = 0` and stepping down by 0 or 1 as the dimension grows (so that the
//! dual `p*(d) = -d - p(d)` is again of the same kind). Each positive dimension
//! is classified by which step occurred: a flat step makes extension by zero
//! exact there (`!`-type), a down step makes pushforward exact (`*`-type).

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinPerversity {
    Zero,
    Top,
    LowerMiddle,
    UpperMiddle,
}

impl BuiltinPerversity {
    pub const ALL: [BuiltinPerversity; 4] = [
        BuiltinPerversity::Zero,
        BuiltinPerversity::Top,
        BuiltinPerversity::LowerMiddle,
        BuiltinPerversity::UpperMiddle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BuiltinPerversity::Zero => "zero",
            BuiltinPerversity::Top => "top",
            BuiltinPerversity::LowerMiddle => "lower-middle",
            BuiltinPerversity::UpperMiddle => "upper-middle",
        }
    }

    pub fn from_name(s: &str) -> Option<BuiltinPerversity> {
        match s {
            "zero" => Some(BuiltinPerversity::Zero),
            "top" => Some(BuiltinPerversity::Top),
            "lower-middle" => Some(BuiltinPerversity::LowerMiddle),
            "upper-middle" => Some(BuiltinPerversity::UpperMiddle),
            _ => None,
        }
    }

    fn value(&self, d: usize) -> i64 {
        let d = d as i64;
        match self {
            BuiltinPerversity::Zero => 0,
            BuiltinPerversity::Top => -d,
            BuiltinPerversity::LowerMiddle => (-d).div_euclid(2),
            BuiltinPerversity::UpperMiddle => -(d / 2),
        }
    }
}

/// How a simplex of positive dimension sits relative to the perversity step at
/// its dimension. Dimension 0 is both at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexKind {
    /// `p(d) = p(d-1)`: extension by zero from the open cell is exact.
    Shriek,
    /// `p(d) = p(d-1) - 1`: pushforward from the open cell is exact.
    Star,
    /// Dimension 0.
    Both,
}

/// A Goresky-MacPherson perversity on dimensions `0..=dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perversity {
    values: Vec<i64>,
}

impl Perversity {
    pub fn builtin(kind: BuiltinPerversity, dim: usize) -> Perversity {
        let values = (0..=dim).map(|d| kind.value(d)).collect();
        let p = Perversity { values };
        debug_assert!(Perversity::validate_gm(&p.values).is_ok());
        p
    }

    /// Builds from an explicit value table `[p(0), ..., p(dim)]`, rejecting
    /// non-GM tables with the first violating dimension pair.
    pub fn from_values(values: Vec<i64>) -> Result<Perversity> {
        Perversity::validate_gm(&values)?;
        Ok(Perversity { values })
    }

    /// GM conditions: `p(0) = 0` and `p(d-1) - p(d)` is 0 or 1 for every `d`.
    pub fn validate_gm(values: &[i64]) -> Result<()> {
        if values.is_empty() {
            return Err(Error::input("perversity table is empty"));
        }
        if values[0] != 0 {
            return Err(Error::input(format!(
                "perversity must vanish in dimension 0, got p(0) = {}",
                values[0]
            )));
        }
        for d in 1..values.len() {
            let step = values[d - 1] - values[d];
            if step != 0 && step != 1 {
                return Err(Error::input(format!(
                    "perversity step p({}) = {} to p({}) = {} is not 0 or -1",
                    d - 1,
                    values[d - 1],
                    d,
                    values[d]
                )));
            }
        }
        Ok(())
    }

    /// Largest dimension the table covers.
    pub fn dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, d: usize) -> i64 {
        self.values[d]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The dual perversity `p*(d) = -d - p(d)`.
    pub fn dual(&self) -> Perversity {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(d, v)| -(d as i64) - v)
            .collect();
        Perversity { values }
    }

    pub fn classify(&self, d: usize) -> SimplexKind {
        if d == 0 {
            return SimplexKind::Both;
        }
        if self.values[d] == self.values[d - 1] {
            SimplexKind::Shriek
        } else {
            SimplexKind::Star
        }
    }

    /// Perverse dimension of each dimension: `p*(d)` on `!`-type dimensions,
    /// `-p(d)` on `*`-type ones, 0 in dimension 0. Injective on `0..=dim` with
    /// image inside `[p*(dim), -p(dim)]`.
    pub fn perverse_dimension(&self) -> PerverseDimension {
        let deltas: Vec<i64> = (0..self.values.len())
            .map(|d| match self.classify(d) {
                SimplexKind::Both => 0,
                SimplexKind::Shriek => -(d as i64) - self.values[d],
                SimplexKind::Star => -self.values[d],
            })
            .collect();
        let dim = self.dim();
        let lo = -(dim as i64) - self.values[dim];
        let hi = -self.values[dim];
        for (d, &x) in deltas.iter().enumerate() {
            assert!(
                (lo..=hi).contains(&x),
                "perverse dimension {x} of dimension {d} escapes [{lo}, {hi}]"
            );
            for (e, &y) in deltas.iter().enumerate().skip(d + 1) {
                assert!(x != y, "perverse dimension collides: dims {d} and {e}");
            }
        }
        PerverseDimension { deltas }
    }
}

/// The injective map from dimensions to homological ranks of the cell quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerverseDimension {
    deltas: Vec<i64>,
}

impl PerverseDimension {
    pub fn of(&self, d: usize) -> i64 {
        self.deltas[d]
    }

    pub fn values(&self) -> &[i64] {
        &self.deltas
    }
}

/// An arbitrary integer weight per stratum name. No GM constraint: this feeds
/// the diagnostic checker, which reports rather than assumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratPerversity {
    values: BTreeMap<String, i64>,
}

impl StratPerversity {
    pub fn new(values: BTreeMap<String, i64>) -> StratPerversity {
        StratPerversity { values }
    }

    pub fn value(&self, stratum: &str) -> Result<i64> {
        self.values
            .get(stratum)
            .copied()
            .ok_or_else(|| Error::input(format!("no perversity value for stratum '{stratum}'")))
    }

    pub fn values(&self) -> &BTreeMap<String, i64> {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables() {
        assert_eq!(
            Perversity::builtin(BuiltinPerversity::LowerMiddle, 4).values(),
            &[0, -1, -1, -2, -2]
        );
        assert_eq!(
            Perversity::builtin(BuiltinPerversity::UpperMiddle, 4).values(),
            &[0, 0, -1, -1, -2]
        );
        assert_eq!(
            Perversity::builtin(BuiltinPerversity::Top, 3).values(),
            &[0, -1, -2, -3]
        );
        assert_eq!(
            Perversity::builtin(BuiltinPerversity::Zero, 3).values(),
            &[0, 0, 0, 0]
        );
    }

    #[test]
    fn duality_pairs_builtins() {
        for dim in 0..=6 {
            let z = Perversity::builtin(BuiltinPerversity::Zero, dim);
            let t = Perversity::builtin(BuiltinPerversity::Top, dim);
            let m = Perversity::builtin(BuiltinPerversity::LowerMiddle, dim);
            let n = Perversity::builtin(BuiltinPerversity::UpperMiddle, dim);
            assert_eq!(z.dual(), t);
            assert_eq!(t.dual(), z);
            assert_eq!(m.dual(), n);
            assert_eq!(n.dual(), m);
        }
    }

    #[test]
    fn gm_validation_reports_first_violation() {
        assert!(Perversity::from_values(vec![0, 0, -1]).is_ok());
        let err = Perversity::from_values(vec![1, 0]).unwrap_err();
        assert!(err.to_string().contains("dimension 0"));
        let err = Perversity::from_values(vec![0, -2]).unwrap_err();
        assert!(err.to_string().contains("p(0) = 0 to p(1) = -2"));
        let err = Perversity::from_values(vec![0, 0, 1]).unwrap_err();
        assert!(err.to_string().contains("p(1) = 0 to p(2) = 1"));
    }

    #[test]
    fn classification_and_perverse_dimension() {
        let m = Perversity::builtin(BuiltinPerversity::LowerMiddle, 2);
        assert_eq!(m.classify(0), SimplexKind::Both);
        assert_eq!(m.classify(1), SimplexKind::Star);
        assert_eq!(m.classify(2), SimplexKind::Shriek);
        assert_eq!(m.perverse_dimension().values(), &[0, 1, -1]);

        let z = Perversity::builtin(BuiltinPerversity::Zero, 3);
        assert_eq!(z.perverse_dimension().values(), &[0, -1, -2, -3]);
        let t = Perversity::builtin(BuiltinPerversity::Top, 3);
        assert_eq!(t.perverse_dimension().values(), &[0, 1, 2, 3]);
    }

    #[test]
    fn dual_swaps_simplex_kind() {
        for kind in BuiltinPerversity::ALL {
            let p = Perversity::builtin(kind, 5);
            let q = p.dual();
            for d in 1..=5 {
                match p.classify(d) {
                    SimplexKind::Shriek => assert_eq!(q.classify(d), SimplexKind::Star),
                    SimplexKind::Star => assert_eq!(q.classify(d), SimplexKind::Shriek),
                    SimplexKind::Both => unreachable!(),
                }
            }
        }
    }
}
