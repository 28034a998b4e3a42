//! Degree-indexed dimension vectors.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Dimensions of a graded vector space over a contiguous degree window.
/// `dims[i]` is the dimension in degree `from + i`. Zero outside the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub from: i64,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn zero() -> GradedDims {
        GradedDims { from: 0, dims: Vec::new() }
    }

    pub fn from_map(map: &BTreeMap<i64, usize>) -> GradedDims {
        let nonzero: Vec<(i64, usize)> =
            map.iter().filter(|(_, &d)| d != 0).map(|(&k, &d)| (k, d)).collect();
        match (nonzero.first(), nonzero.last()) {
            (Some(&(lo, _)), Some(&(hi, _))) => {
                let mut dims = vec![0usize; (hi - lo) as usize + 1];
                for (k, d) in nonzero {
                    dims[(k - lo) as usize] = d;
                }
                GradedDims { from: lo, dims }
            }
            _ => GradedDims::zero(),
        }
    }

    pub fn dim_at(&self, degree: i64) -> usize {
        if degree < self.from {
            return 0;
        }
        let i = (degree - self.from) as usize;
        self.dims.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Degrees carrying a nonzero dimension, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, _)| self.from + i as i64)
            .collect()
    }

    /// Alternating sum over the window.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let k = self.from + i as i64;
                if k.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }
            })
            .sum()
    }

    /// Drops zero margins so equal spaces compare equal.
    pub fn trimmed(mut self) -> GradedDims {
        while self.dims.last() == Some(&0) {
            self.dims.pop();
        }
        let lead = self.dims.iter().take_while(|&&d| d == 0).count();
        if lead > 0 {
            self.dims.drain(0..lead);
            self.from += lead as i64;
        }
        if self.dims.is_empty() {
            self.from = 0;
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_roundtrip_and_accessors() {
        let mut m = BTreeMap::new();
        m.insert(-2, 1);
        m.insert(0, 3);
        m.insert(1, 0);
        let g = GradedDims::from_map(&m);
        assert_eq!(g.from, -2);
        assert_eq!(g.dims, vec![1, 0, 3]);
        assert_eq!(g.dim_at(-2), 1);
        assert_eq!(g.dim_at(-1), 0);
        assert_eq!(g.dim_at(0), 3);
        assert_eq!(g.dim_at(5), 0);
        assert_eq!(g.support(), vec![-2, 0]);
        assert_eq!(g.euler(), 4);
        assert_eq!(g.total(), 4);
    }

    #[test]
    fn trimming_normalizes() {
        let g = GradedDims { from: -1, dims: vec![0, 0, 2, 0] };
        let t = g.trimmed();
        assert_eq!(t.from, 1);
        assert_eq!(t.dims, vec![2]);
        let z = GradedDims { from: 7, dims: vec![0, 0] }.trimmed();
        assert_eq!(z, GradedDims::zero());
    }
}
