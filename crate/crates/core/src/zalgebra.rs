//! Integer structure-constant algebras with group actions, and matrices over
//! them. These are the concrete coefficient rings of the twisted categories.
//!
//! An algebra is given by its rank d, structure constants for basis products,
//! and a unit vector; associativity and the unit laws are checked at
//! construction. A group acts through a family of ring automorphisms σ_g with
//! σ_e = id and σ_{gh} = σ_h ∘ σ_g — the right-action composition law. Users
//! supply a left action τ on generators; the stored family is σ_g = τ(g⁻¹).

use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::intmat::IntMat;
use num::bigint::BigInt;
use num::{One, Zero};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Coefficient vector in the basis of a [`ZAlgebra`].
pub type RVec = Vec<BigInt>;

#[derive(Debug)]
pub struct ZAlgebra {
    name: String,
    rank: usize,
    /// structure[i][j] = coefficient vector of e_i · e_j
    structure: Vec<Vec<RVec>>,
    unit: RVec,
}

impl ZAlgebra {
    pub fn new(name: &str, rank: usize, structure: Vec<Vec<RVec>>, unit: RVec) -> Result<Arc<Self>> {
        let alg = ZAlgebra {
            name: name.to_string(),
            rank,
            structure,
            unit,
        };
        if alg.structure.len() != rank
            || alg.structure.iter().any(|row| row.len() != rank)
            || alg
                .structure
                .iter()
                .flatten()
                .any(|v| v.len() != rank)
            || alg.unit.len() != rank
        {
            return Err(Error::RingViolation(
                "structure constants have wrong shape".into(),
            ));
        }
        // unit laws on basis vectors
        for i in 0..rank {
            let e = alg.basis_vec(i);
            if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
                return Err(Error::RingViolation(format!("unit law fails on e_{i}")));
            }
        }
        // associativity on all basis triples
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    let left = alg.mul(&alg.structure[i][j].clone(), &alg.basis_vec(k));
                    let right = alg.mul(&alg.basis_vec(i), &alg.structure[j][k].clone());
                    if left != right {
                        return Err(Error::RingViolation(format!(
                            "associativity fails on (e_{i}, e_{j}, e_{k})"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(alg))
    }

    /// Builtin rings: `Z`, `Z[i]`, `Z[C3]`, `ZxZ-swap`.
    pub fn builtin(name: &str) -> Result<Arc<Self>> {
        let b = |v: &[i64]| -> RVec { v.iter().map(|&x| BigInt::from(x)).collect() };
        match name {
            "Z" => ZAlgebra::new("Z", 1, vec![vec![b(&[1])]], b(&[1])),
            "Z[i]" => ZAlgebra::new(
                "Z[i]",
                2,
                vec![
                    vec![b(&[1, 0]), b(&[0, 1])],
                    vec![b(&[0, 1]), b(&[-1, 0])],
                ],
                b(&[1, 0]),
            ),
            "Z[C3]" => {
                let mut structure = vec![vec![RVec::new(); 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        let mut v = vec![BigInt::zero(); 3];
                        v[(i + j) % 3] = BigInt::one();
                        structure[i][j] = v;
                    }
                }
                ZAlgebra::new("Z[C3]", 3, structure, b(&[1, 0, 0]))
            }
            "ZxZ-swap" => ZAlgebra::new(
                "ZxZ-swap",
                2,
                vec![
                    vec![b(&[1, 0]), b(&[0, 0])],
                    vec![b(&[0, 0]), b(&[0, 1])],
                ],
                b(&[1, 1]),
            ),
            _ => Err(Error::InputError(format!("unknown builtin ring {name:?}"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn zero_vec(&self) -> RVec {
        vec![BigInt::zero(); self.rank]
    }

    pub fn unit_vec(&self) -> RVec {
        self.unit.clone()
    }

    pub fn basis_vec(&self, i: usize) -> RVec {
        let mut v = self.zero_vec();
        v[i] = BigInt::one();
        v
    }

    /// Bilinear product through the structure constants.
    pub fn mul(&self, x: &RVec, y: &RVec) -> RVec {
        assert_eq!(x.len(), self.rank, "ring vector rank");
        assert_eq!(y.len(), self.rank, "ring vector rank");
        let mut out = self.zero_vec();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if y[j].is_zero() {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for k in 0..self.rank {
                    out[k] += &scale * &self.structure[i][j][k];
                }
            }
        }
        out
    }

    pub fn add(x: &RVec, y: &RVec) -> RVec {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn is_zero_vec(v: &RVec) -> bool {
        v.iter().all(|x| x.is_zero())
    }
}

/// One ring automorphism, stored as its matrix on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingAutomorphism {
    pub matrix: IntMat,
}

impl RingAutomorphism {
    pub fn identity(rank: usize) -> Self {
        RingAutomorphism {
            matrix: IntMat::identity(rank),
        }
    }

    pub fn apply(&self, v: &RVec) -> RVec {
        self.matrix.mul_vec(v)
    }

    /// Invertible over Z, preserves products on basis pairs, fixes the unit.
    pub fn validate(&self, ring: &ZAlgebra) -> Result<()> {
        if !self.matrix.is_unimodular() {
            return Err(Error::RingViolation(
                "automorphism matrix is not invertible over Z".into(),
            ));
        }
        if self.apply(&ring.unit_vec()) != ring.unit_vec() {
            return Err(Error::RingViolation("automorphism moves the unit".into()));
        }
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let lhs = self.apply(&ring.mul(&ring.basis_vec(i), &ring.basis_vec(j)));
                let rhs = ring.mul(
                    &self.apply(&ring.basis_vec(i)),
                    &self.apply(&ring.basis_vec(j)),
                );
                if lhs != rhs {
                    return Err(Error::RingViolation(format!(
                        "automorphism is not multiplicative on (e_{i}, e_{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The full action: one automorphism σ_g per group element, anti-multiplicative
/// in g.
#[derive(Clone, Debug)]
pub struct RingAction {
    group: Group,
    ring: Arc<ZAlgebra>,
    sigma: Vec<RingAutomorphism>,
}

impl RingAction {
    pub fn trivial(group: Group, ring: Arc<ZAlgebra>) -> RingAction {
        let id = RingAutomorphism::identity(ring.rank());
        let sigma = vec![id; group.order()];
        RingAction { group, ring, sigma }
    }

    /// Extends a left action τ given on generators to the whole group and
    /// stores σ_g = τ(g⁻¹). The extension is validated exhaustively.
    pub fn from_left_generator_maps(
        group: Group,
        ring: Arc<ZAlgebra>,
        gen_maps: &BTreeMap<usize, IntMat>,
    ) -> Result<RingAction> {
        let d = ring.rank();
        let gens = group.generator_indices().to_vec();
        for (k, m) in gen_maps {
            if *k >= gens.len() {
                return Err(Error::InputError(format!(
                    "action references generator index {k} out of range"
                )));
            }
            if m.rows() != d || m.cols() != d {
                return Err(Error::InputError(format!(
                    "action matrix for generator {k} has wrong shape"
                )));
            }
        }
        let mut tau: Vec<Option<IntMat>> = vec![None; group.order()];
        tau[group.identity()] = Some(IntMat::identity(d));
        let mut queue = vec![group.identity()];
        while let Some(g) = queue.pop() {
            let tg = tau[g].clone().expect("visited");
            for (w, s) in gens.iter().enumerate() {
                let h = group.mul(g, *s);
                if tau[h].is_some() {
                    continue;
                }
                let ts = gen_maps
                    .get(&w)
                    .cloned()
                    .unwrap_or_else(|| IntMat::identity(d));
                tau[h] = Some(tg.mul(&ts));
                queue.push(h);
            }
        }
        let sigma: Vec<RingAutomorphism> = (0..group.order())
            .map(|g| RingAutomorphism {
                matrix: tau[group.inv(g)].clone().expect("group generated"),
            })
            .collect();
        let action = RingAction { group, ring, sigma };
        action.validate()?;
        Ok(action)
    }

    /// The builtin action for the builtin rings: odd permutations act by the
    /// canonical order-2 automorphism (conjugation on Z[i], inversion on
    /// Z[C3], the swap on ZxZ-swap), even permutations act trivially.
    pub fn builtin(group: Group, ring: Arc<ZAlgebra>) -> Result<RingAction> {
        let flip: Option<IntMat> = match ring.name() {
            "Z" => None,
            "Z[i]" => Some(IntMat::from_i64_rows(&[vec![1, 0], vec![0, -1]])),
            "Z[C3]" => Some(IntMat::from_i64_rows(&[
                vec![1, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
            ])),
            "ZxZ-swap" => Some(IntMat::from_i64_rows(&[vec![0, 1], vec![1, 0]])),
            other => {
                return Err(Error::InputError(format!(
                    "no builtin action for ring {other:?}"
                )))
            }
        };
        let sigma: Vec<RingAutomorphism> = (0..group.order())
            .map(|g| match (&flip, group.elem(g).is_even()) {
                (Some(m), false) => RingAutomorphism { matrix: m.clone() },
                _ => RingAutomorphism::identity(ring.rank()),
            })
            .collect();
        let action = RingAction { group, ring, sigma };
        action.validate()?;
        Ok(action)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn ring(&self) -> &Arc<ZAlgebra> {
        &self.ring
    }

    pub fn sigma(&self, g: Elem) -> &RingAutomorphism {
        &self.sigma[g]
    }

    pub fn apply(&self, g: Elem, v: &RVec) -> RVec {
        self.sigma[g].apply(v)
    }

    pub fn is_trivial(&self) -> bool {
        let id = IntMat::identity(self.ring.rank());
        self.sigma.iter().all(|s| s.matrix == id)
    }

    /// Exhaustive check: σ_e = id, σ_{gh} = σ_h ∘ σ_g, and every σ_g is a
    /// unit-fixing ring automorphism.
    pub fn validate(&self) -> Result<()> {
        if self.sigma.len() != self.group.order() {
            return Err(Error::RingViolation("action is missing elements".into()));
        }
        if self.sigma[self.group.identity()].matrix != IntMat::identity(self.ring.rank()) {
            return Err(Error::ActionViolation {
                g: self.group.identity(),
                h: self.group.identity(),
                reason: "σ_e is not the identity".into(),
            });
        }
        for g in self.group.elements() {
            self.sigma[g].validate(&self.ring).map_err(|e| {
                Error::ActionViolation {
                    g,
                    h: g,
                    reason: e.to_string(),
                }
            })?;
        }
        for g in self.group.elements() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                let lhs = &self.sigma[gh].matrix;
                let rhs = self.sigma[h].matrix.mul(&self.sigma[g].matrix);
                if *lhs != rhs {
                    return Err(Error::ActionViolation {
                        g,
                        h,
                        reason: "σ_{gh} ≠ σ_h ∘ σ_g".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// On-disk ring description.
#[derive(Debug, Deserialize)]
pub struct RingSpec {
    pub rank: usize,
    pub structure: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<i64>>>,
}

impl RingSpec {
    pub fn build(&self, name: &str, group: &Group) -> Result<(Arc<ZAlgebra>, RingAction)> {
        let structure: Vec<Vec<RVec>> = self
            .structure
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                    .collect()
            })
            .collect();
        let unit: RVec = self.unit.iter().map(|&x| BigInt::from(x)).collect();
        let ring = ZAlgebra::new(name, self.rank, structure, unit)?;
        let action = if self.action.is_empty() {
            RingAction::trivial(group.clone(), ring.clone())
        } else {
            let mut gen_maps = BTreeMap::new();
            for (k, m) in &self.action {
                let idx: usize = k.parse().map_err(|_| {
                    Error::InputError(format!("action key {k:?} is not a generator index"))
                })?;
                gen_maps.insert(idx, IntMat::from_i64_rows(m));
            }
            RingAction::from_left_generator_maps(group.clone(), ring.clone(), &gen_maps)?
        };
        Ok((ring, action))
    }
}

/// Loads a ring + action from a builtin name or a JSON spec file.
pub fn load_ring(spec: &str, group: &Group) -> Result<(Arc<ZAlgebra>, RingAction)> {
    if let Ok(ring) = ZAlgebra::builtin(spec) {
        let action = RingAction::builtin(group.clone(), ring.clone())?;
        return Ok((ring, action));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::InputError(format!("cannot read ring spec {spec:?}: {e}")))?;
    let parsed: RingSpec = serde_json::from_str(&text)
        .map_err(|e| Error::InputError(format!("malformed ring spec {spec:?}: {e}")))?;
    parsed.build(spec, group)
}

/// A matrix with entries in a [`ZAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RVec>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize, ring: &ZAlgebra) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![ring.zero_vec(); rows * cols],
        }
    }

    pub fn identity(n: usize, ring: &ZAlgebra) -> Self {
        let mut m = RMatrix::zeros(n, n, ring);
        for i in 0..n {
            m.set(i, i, ring.unit_vec());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RVec) -> Self {
        let entries = (0..rows * cols)
            .map(|k| f(k / cols, k % cols))
            .collect();
        RMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RVec {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RVec) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ZAlgebra::is_zero_vec)
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RMatrix::from_fn(self.rows, self.cols, |r, c| {
            ZAlgebra::add(self.get(r, c), other.get(r, c))
        })
    }

    pub fn mul(&self, ring: &ZAlgebra, other: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, other.rows, "R-matrix product shape");
        RMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = ring.zero_vec();
            for k in 0..self.cols {
                let prod = ring.mul(self.get(r, k), other.get(k, c));
                acc = ZAlgebra::add(&acc, &prod);
            }
            acc
        })
    }

    /// Applies σ_g to every entry.
    pub fn twist(&self, action: &RingAction, g: Elem) -> RMatrix {
        RMatrix::from_fn(self.rows, self.cols, |r, c| action.apply(g, self.get(r, c)))
    }

    /// Integer scalar multiple.
    pub fn scale_int(&self, s: &BigInt) -> RMatrix {
        RMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).iter().map(|x| x * s).collect()
        })
    }

    /// Kronecker product with an integer matrix on the outside:
    /// block (i, j) of the result is `c[i][j] * self`.
    pub fn int_kronecker(c: &IntMat, m: &RMatrix) -> RMatrix {
        RMatrix::from_fn(c.rows() * m.rows, c.cols() * m.cols, |r, col| {
            let (r1, r2) = (r / m.rows, r % m.rows);
            let (c1, c2) = (col / m.cols, col % m.cols);
            m.get(r2, c2).iter().map(|x| x * c.get(r1, c1)).collect()
        })
    }

    /// Copies `block` into position with top-left corner (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn get_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RMatrix {
        RMatrix::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn gaussian_integers_i_squared() {
        let zi = ZAlgebra::builtin("Z[i]").unwrap();
        let i = zi.basis_vec(1);
        assert_eq!(zi.mul(&i, &i), vec![bi(-1), bi(0)]);
    }

    #[test]
    fn unit_law_on_samples() {
        let zc3 = ZAlgebra::builtin("Z[C3]").unwrap();
        let u = zc3.unit_vec();
        for x in [
            vec![bi(2), bi(-1), bi(3)],
            vec![bi(0), bi(0), bi(0)],
            vec![bi(-5), bi(7), bi(1)],
        ] {
            assert_eq!(zc3.mul(&u, &x), x);
            assert_eq!(zc3.mul(&x, &u), x);
        }
    }

    #[test]
    fn group_algebra_c3_group_law() {
        let zc3 = ZAlgebra::builtin("Z[C3]").unwrap();
        let t = zc3.basis_vec(1);
        let t2 = zc3.basis_vec(2);
        assert_eq!(zc3.mul(&t, &t2), zc3.basis_vec(0));
    }

    #[test]
    fn rejects_non_associative_structure() {
        // (e1 e1) e2 = e2 e2 = 0 but e1 (e1 e2) = e1 e0 = e1
        let b = |v: &[i64]| -> RVec { v.iter().map(|&x| bi(x)).collect() };
        let bad = ZAlgebra::new(
            "bad",
            3,
            vec![
                vec![b(&[1, 0, 0]), b(&[0, 1, 0]), b(&[0, 0, 1])],
                vec![b(&[0, 1, 0]), b(&[0, 0, 1]), b(&[1, 0, 0])],
                vec![b(&[0, 0, 1]), b(&[0, 0, 0]), b(&[0, 0, 0])],
            ],
            b(&[1, 0, 0]),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn trivial_action_on_z_validates() {
        let g = Group::builtin("S3").unwrap();
        let z = ZAlgebra::builtin("Z").unwrap();
        RingAction::trivial(g, z).validate().unwrap();
    }

    #[test]
    fn gaussian_conjugation_with_c2() {
        let c2 = Group::builtin("C2").unwrap();
        let zi = ZAlgebra::builtin("Z[i]").unwrap();
        let action = RingAction::builtin(c2.clone(), zi.clone()).unwrap();
        action.validate().unwrap();
        let t = (0..c2.order()).find(|&g| g != c2.identity()).unwrap();
        let i = zi.basis_vec(1);
        assert_eq!(action.apply(t, &i), vec![bi(0), bi(-1)]);
    }

    #[test]
    fn broken_action_names_offending_pair() {
        // On C4 with Z[i]: send the generator to conjugation but build the
        // family inconsistently by hand.
        let c4 = Group::builtin("C4").unwrap();
        let zi = ZAlgebra::builtin("Z[i]").unwrap();
        let conj = IntMat::from_i64_rows(&[vec![1, 0], vec![0, -1]]);
        let mut sigma: Vec<RingAutomorphism> = (0..4)
            .map(|_| RingAutomorphism::identity(2))
            .collect();
        // order-4 generator acting by an order-2 map, others identity:
        // breaks σ_{gh} = σ_h σ_g somewhere
        let gen = c4.generator_indices()[0];
        sigma[gen] = RingAutomorphism { matrix: conj };
        let action = RingAction {
            group: c4,
            ring: zi,
            sigma,
        };
        match action.validate() {
            Err(Error::ActionViolation { .. }) => {}
            other => panic!("expected ActionViolation, got {other:?}"),
        }
    }

    #[test]
    fn builtin_actions_validate_for_test_groups() {
        for gname in ["S3", "D4", "A4", "C6"] {
            let g = Group::builtin(gname).unwrap();
            for rname in ["Z", "Z[i]", "Z[C3]", "ZxZ-swap"] {
                let ring = ZAlgebra::builtin(rname).unwrap();
                let action = RingAction::builtin(g.clone(), ring).unwrap();
                action.validate().unwrap_or_else(|e| {
                    panic!("builtin action {rname} on {gname}: {e}");
                });
            }
        }
    }

    #[test]
    fn anti_composition_of_twists() {
        let s3 = Group::builtin("S3").unwrap();
        let zi = ZAlgebra::builtin("Z[i]").unwrap();
        let action = RingAction::builtin(s3.clone(), zi.clone()).unwrap();
        let m = RMatrix::from_fn(2, 2, |r, c| vec![bi((r + 2 * c) as i64), bi(1)]);
        for g in s3.elements() {
            for h in s3.elements() {
                let gh = s3.mul(g, h);
                let lhs = m.twist(&action, gh);
                let rhs = m.twist(&action, g).twist(&action, h);
                assert_eq!(lhs, rhs, "σ_[gh] = σ_h∘σ_g entrywise");
            }
        }
    }

    #[test]
    fn ring_spec_roundtrip() {
        let json = r#"{
            "rank": 2,
            "structure": [[[1,0],[0,1]],[[0,1],[-1,0]]],
            "unit": [1,0],
            "action": {"0": [[1,0],[0,-1]]}
        }"#;
        let spec: RingSpec = serde_json::from_str(json).unwrap();
        let c2 = Group::builtin("C2").unwrap();
        let (ring, action) = spec.build("user", &c2).unwrap();
        assert_eq!(ring.rank(), 2);
        action.validate().unwrap();
    }

    #[test]
    fn rmatrix_identity_multiplication() {
        let zi = ZAlgebra::builtin("Z[i]").unwrap();
        let id = RMatrix::identity(3, &zi);
        let m = RMatrix::from_fn(3, 3, |r, c| vec![bi(r as i64 - c as i64), bi(1)]);
        assert_eq!(id.mul(&zi, &m), m);
        assert_eq!(m.mul(&zi, &id), m);
    }
}
