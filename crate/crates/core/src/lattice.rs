//! Integer lattices with a subgroup action: pairs (Z^m, β) where
//! β sends each element of the acting subgroup to an invertible integer
//! matrix. Morphisms are intertwining integer matrices. Tensor product is
//! the Kronecker product; induction and restriction move lattices along
//! subgroup inclusions.
//!
//! Induced-lattice coordinates are ordered lattice-index outer,
//! representative inner: basis vector (s, λ) ↔ a_λ ⊗ e_s occupies index
//! s·r + λ. The Frobenius checks rely on this layout matching the tensor
//! layout of the pairing functor.

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::intmat::IntMat;
use num::bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    sub: Subgroup,
    rank: usize,
    rep: BTreeMap<Elem, IntMat>,
}

impl Lattice {
    /// Validates the identity, homomorphism and invertibility conditions.
    pub fn new(sub: Subgroup, rank: usize, rep: BTreeMap<Elem, IntMat>) -> Result<Lattice> {
        for &m in sub.members() {
            let mat = rep
                .get(&m)
                .ok_or_else(|| Error::InputError(format!("missing matrix for element {m}")))?;
            if mat.rows() != rank || mat.cols() != rank {
                return Err(Error::DimensionMismatch {
                    expected: format!("{rank}x{rank}"),
                    got: format!("{}x{}", mat.rows(), mat.cols()),
                });
            }
            if !mat.is_unimodular() {
                return Err(Error::InputError(format!(
                    "matrix for element {m} is not invertible over Z"
                )));
            }
        }
        let lat = Lattice { sub, rank, rep };
        if lat.rep[&lat.sub.group().identity()] != IntMat::identity(rank) {
            return Err(Error::InputError("identity does not act trivially".into()));
        }
        for &a in lat.sub.members() {
            for &b in lat.sub.members() {
                let ab = lat.sub.group().mul(a, b);
                if lat.rep[&ab] != lat.rep[&a].mul(&lat.rep[&b]) {
                    return Err(Error::InputError(format!(
                        "action is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(lat)
    }

    pub fn trivial(sub: Subgroup, rank: usize) -> Lattice {
        let rep = sub
            .members()
            .iter()
            .map(|&m| (m, IntMat::identity(rank)))
            .collect();
        Lattice { sub, rank, rep }
    }

    /// Left regular representation of the subgroup on its own members, in
    /// canonical member order.
    pub fn regular(sub: Subgroup) -> Lattice {
        let members = sub.members().to_vec();
        let pos: BTreeMap<Elem, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let n = members.len();
        let group = sub.group().clone();
        let rep = members
            .iter()
            .map(|&g| {
                let mat = IntMat::from_fn(n, n, |row, col| {
                    if pos[&group.mul(g, members[col])] == row {
                        BigInt::from(1)
                    } else {
                        BigInt::from(0)
                    }
                });
                (g, mat)
            })
            .collect();
        Lattice {
            sub,
            rank: n,
            rep,
        }
    }

    pub fn sub(&self) -> &Subgroup {
        &self.sub
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self, g: Elem) -> &IntMat {
        &self.rep[&g]
    }

    /// Character value: trace of the acting matrix.
    pub fn character(&self, g: Elem) -> BigInt {
        let m = &self.rep[&g];
        (0..self.rank).map(|i| m.get(i, i).clone()).sum()
    }

    pub fn tensor(&self, other: &Lattice) -> Result<Lattice> {
        if self.sub != other.sub {
            return Err(Error::GroupMismatch);
        }
        let rep = self
            .sub
            .members()
            .iter()
            .map(|&g| (g, self.rep[&g].kronecker(&other.rep[&g])))
            .collect();
        Ok(Lattice {
            sub: self.sub.clone(),
            rank: self.rank * other.rank,
            rep,
        })
    }

    /// Forgets down to a smaller acting subgroup; the rank is unchanged.
    pub fn restrict(&self, to: &Subgroup) -> Result<Lattice> {
        if !to.is_subgroup_of(&self.sub) {
            return Err(Error::NotNested {
                sub: to.order(),
                sup: self.sub.order(),
            });
        }
        let rep = to
            .members()
            .iter()
            .map(|&m| (m, self.rep[&m].clone()))
            .collect();
        Ok(Lattice {
            sub: to.clone(),
            rank: self.rank,
            rep,
        })
    }

    /// Induces along `self.sub ≤ to` with the given coset representatives of
    /// `to / self.sub`; the rank multiplies by the index.
    pub fn induce(&self, to: &Subgroup, reps: &[Elem]) -> Result<Lattice> {
        if !self.sub.is_subgroup_of(to) {
            return Err(Error::NotNested {
                sub: self.sub.order(),
                sup: to.order(),
            });
        }
        let r = reps.len();
        assert_eq!(r * self.sub.order(), to.order(), "full representative set");
        let group = self.sub.group().clone();
        // coset index of each element of `to`
        let mut coset_of: BTreeMap<Elem, usize> = BTreeMap::new();
        for (idx, &a) in reps.iter().enumerate() {
            for &i in self.sub.members() {
                coset_of.insert(group.mul(a, i), idx);
            }
        }
        let m = self.rank;
        let rank = r * m;
        let rep = to
            .members()
            .iter()
            .map(|&j| {
                let mut mat = IntMat::zeros(rank, rank);
                for (lam, &a) in reps.iter().enumerate() {
                    let ja = group.mul(j, a);
                    let mu = coset_of[&ja];
                    let i = group.mul(group.inv(reps[mu]), ja);
                    let beta = &self.rep[&i];
                    for s_out in 0..m {
                        for s_in in 0..m {
                            let v = beta.get(s_out, s_in).clone();
                            mat.set(s_out * r + mu, s_in * r + lam, v);
                        }
                    }
                }
                (j, mat)
            })
            .collect();
        Ok(Lattice {
            sub: to.clone(),
            rank,
            rep,
        })
    }
}

/// Basis of the intertwiner space Hom(src, dst): all integer matrices M with
/// M·β1(i) = β2(i)·M, computed as the kernel of the linear constraint system
/// on the m2·m1 entries of M (row-major).
pub fn hom_basis(src: &Lattice, dst: &Lattice) -> Result<Vec<IntMat>> {
    if src.sub != dst.sub {
        return Err(Error::GroupMismatch);
    }
    let (m1, m2) = (src.rank, dst.rank);
    let vars = m1 * m2;
    let members = src.sub.members();
    let mut constraints = IntMat::zeros(members.len() * vars, vars);
    for (gi, &g) in members.iter().enumerate() {
        let b1 = src.matrix(g);
        let b2 = dst.matrix(g);
        for r in 0..m2 {
            for c in 0..m1 {
                let row = gi * vars + r * m1 + c;
                // (M b1)[r,c] - (b2 M)[r,c] = 0
                for k in 0..m1 {
                    let cur = constraints.get(row, r * m1 + k) + b1.get(k, c);
                    constraints.set(row, r * m1 + k, cur);
                }
                for k in 0..m2 {
                    let cur = constraints.get(row, k * m1 + c) - b2.get(r, k);
                    constraints.set(row, k * m1 + c, cur);
                }
            }
        }
    }
    let kernel = constraints.snf().kernel_basis();
    Ok((0..kernel.cols())
        .map(|j| IntMat::from_fn(m2, m1, |r, c| kernel.get(r * m1 + c, j).clone()))
        .collect())
}

/// A morphism of lattices: an integer matrix intertwining the two actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatMor {
    pub src: Lattice,
    pub dst: Lattice,
    pub matrix: IntMat,
}

impl LatMor {
    pub fn new(src: Lattice, dst: Lattice, matrix: IntMat) -> Result<LatMor> {
        if src.sub != dst.sub {
            return Err(Error::GroupMismatch);
        }
        if matrix.rows() != dst.rank || matrix.cols() != src.rank {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", dst.rank, src.rank),
                got: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        for &i in src.sub.members() {
            if matrix.mul(src.matrix(i)) != dst.matrix(i).mul(&matrix) {
                return Err(Error::InputError(format!(
                    "matrix does not intertwine the actions at element {i}"
                )));
            }
        }
        Ok(LatMor { src, dst, matrix })
    }

    pub fn identity(l: &Lattice) -> LatMor {
        LatMor {
            src: l.clone(),
            dst: l.clone(),
            matrix: IntMat::identity(l.rank()),
        }
    }

    pub fn compose(&self, other: &LatMor) -> LatMor {
        assert_eq!(self.src, other.dst);
        LatMor {
            src: other.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    /// Restriction of a morphism: same matrix over the smaller subgroup.
    pub fn restrict(&self, to: &Subgroup) -> Result<LatMor> {
        Ok(LatMor {
            src: self.src.restrict(to)?,
            dst: self.dst.restrict(to)?,
            matrix: self.matrix.clone(),
        })
    }

    /// Induction of a morphism along shared representatives: block-diagonal
    /// copies in the induced coordinate layout.
    pub fn induce(&self, to: &Subgroup, reps: &[Elem]) -> Result<LatMor> {
        let src = self.src.induce(to, reps)?;
        let dst = self.dst.induce(to, reps)?;
        let matrix = self.matrix.kronecker(&IntMat::identity(reps.len()));
        Ok(LatMor { src, dst, matrix })
    }
}
