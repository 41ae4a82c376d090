use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A permutation of the points `0..n`, stored as its image sequence.
///
/// The canonical total order on permutations of a fixed degree is the
/// lexicographic order on image sequences; every deterministic choice in the
/// workbench (element ordering, coset representatives) derives from it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image sequence, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation { degree: n, images });
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of `degree` points from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return Err(Error::InvalidPermutation {
                        degree,
                        images: cycle.clone(),
                    });
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Sign of the permutation: `true` for even.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.images.len()];
        let mut out = String::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
                first = false;
                x = self.images[x];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![0, 2]).is_err());
        assert!(Perm::from_images(vec![1, 0, 2]).is_ok());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // s = (0 1), t = (1 2); s∘t sends 2 -> 1 -> 0? no: t(2)=1, s(1)=0.
        let s = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let t = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let st = s.compose(&t);
        assert_eq!(st.apply(2), 0);
        assert_eq!(st.apply(0), 1);
        assert_eq!(st.apply(1), 2);
    }

    #[test]
    fn inverse_and_parity() {
        let c = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(c.compose(&c.inverse()).is_identity());
        assert!(!c.is_even()); // 4-cycle is odd
        let t = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        assert!(t.is_even());
    }

    #[test]
    fn cycle_string_roundtrip_display() {
        let p = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.cycle_string(), "(0 1 2)(3 4)");
        assert_eq!(Perm::identity(3).cycle_string(), "()");
    }
}
