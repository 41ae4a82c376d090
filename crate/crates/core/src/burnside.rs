//! The Burnside ring through its table of marks, the Burnside Green functor
//! on all subgroups, permutation characters, and the Artin induction solver
//! over cyclic subgroups.
//!
//! Multiplication of Burnside elements goes through the mark homomorphism:
//! multiply the mark vectors pointwise and invert the (triangular) table over
//! exact rationals; non-integrality of the result signals a bug, not data.
//! The double-coset product formula is implemented independently for the
//! Green-functor pairing, which gives the tests a second route to the same
//! numbers.

use crate::checks::Outcome;
use crate::error::{Error, Result};
use crate::fgab::FgAbelianGroup;
use crate::group::{Group, Subgroup};
use crate::intmat::IntMat;
use crate::mackey::{GreenFunctor, GreenModule, MackeyFunctor, PairingTable};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Conjugacy classes of subgroups under the given ambient subgroup, each a
/// sorted list of subgroup ids, ordered by (order, canonical representative).
/// The representative of a class is its first (minimal) member.
pub fn subgroup_classes(g: &Group, ambient: &Subgroup) -> Vec<Vec<usize>> {
    let subs = g.subgroups();
    let mut seen = vec![false; subs.len()];
    let mut classes = Vec::new();
    for (id, h) in subs.iter().enumerate() {
        if seen[id] || !h.is_subgroup_of(ambient) {
            continue;
        }
        let mut class: Vec<usize> = ambient
            .members()
            .iter()
            .map(|&f| g.subgroup_id(&h.conjugate(f)).expect("conjugate exists"))
            .collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        classes.push(class);
    }
    // subgroups() is sorted by (order, members), so scanning in id order and
    // keying each class by its minimal member already yields the canonical
    // (order, representative) order
    classes.sort_by_key(|c| (subs[c[0]].order(), c[0]));
    classes
}

/// Table of marks: rows and columns indexed by the subgroup classes of the
/// whole group; entry (H, K) counts the K-fixed points on G/H.
#[derive(Clone, Debug)]
pub struct TableOfMarks {
    pub classes: Vec<Vec<usize>>,
    pub marks: IntMat,
}

pub fn table_of_marks(g: &Group) -> TableOfMarks {
    let full = g.full_subgroup();
    let classes = subgroup_classes(g, &full);
    let subs = g.subgroups();
    let n = classes.len();
    let mut marks = IntMat::zeros(n, n);
    for (row, class_h) in classes.iter().enumerate() {
        let h = &subs[class_h[0]];
        let coset_reps = full.left_coset_reps(h).expect("nested");
        for (col, class_k) in classes.iter().enumerate() {
            let k = &subs[class_k[0]];
            let count = coset_reps
                .iter()
                .filter(|&&a| {
                    let a_inv = g.inv(a);
                    k.members()
                        .iter()
                        .all(|&x| h.contains(g.mul(g.mul(a_inv, x), a)))
                })
                .count();
            marks.set(row, col, BigInt::from(count));
        }
    }
    TableOfMarks { classes, marks }
}

impl TableOfMarks {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing the subgroup id.
    pub fn class_of(&self, sub_id: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&sub_id).is_ok())
    }

    /// Lower-triangularity and positive diagonal, asserted.
    pub fn verify_triangular(&self) -> Result<()> {
        let n = self.class_count();
        for r in 0..n {
            if !self.marks.get(r, r).is_positive() {
                return Err(Error::IntegralityViolation(format!(
                    "mark diagonal at class {r} is not positive"
                )));
            }
            for c in (r + 1)..n {
                if !self.marks.get(r, c).is_zero() {
                    return Err(Error::IntegralityViolation(format!(
                        "mark table not lower-triangular at ({r}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Mark vector of a Burnside element (coefficients over classes).
    pub fn marks_of(&self, x: &[BigInt]) -> Vec<BigInt> {
        let n = self.class_count();
        assert_eq!(x.len(), n);
        (0..n)
            .map(|k| (0..n).map(|h| x[h].clone() * self.marks.get(h, k)).sum())
            .collect()
    }

    /// Inverts the mark homomorphism by exact rational back-substitution;
    /// errors if the preimage is not integral.
    pub fn element_from_marks(&self, w: &[BigInt]) -> Result<Vec<BigInt>> {
        let n = self.class_count();
        assert_eq!(w.len(), n);
        let mut z: Vec<BigRational> = vec![BigRational::zero(); n];
        for k in (0..n).rev() {
            let mut acc = BigRational::from_integer(w[k].clone());
            for h in (k + 1)..n {
                acc -= BigRational::from_integer(self.marks.get(h, k).clone()) * &z[h];
            }
            z[k] = acc / BigRational::from_integer(self.marks.get(k, k).clone());
        }
        z.into_iter()
            .map(|q| {
                if q.is_integer() {
                    Ok(q.to_integer())
                } else {
                    Err(Error::IntegralityViolation(format!(
                        "non-integral Burnside coefficient {q}"
                    )))
                }
            })
            .collect()
    }

    /// Product via marks: pointwise multiply, invert, assert integrality.
    pub fn product(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vec<BigInt>> {
        let mx = self.marks_of(x);
        let my = self.marks_of(y);
        let mw: Vec<BigInt> = mx.iter().zip(&my).map(|(a, b)| a * b).collect();
        self.element_from_marks(&mw)
    }
}

/// Per-subgroup Burnside data for the Green functor.
struct SubBurnside {
    classes: Vec<Vec<usize>>,
    class_of: BTreeMap<usize, usize>,
}

fn sub_burnside(g: &Group, ambient: &Subgroup) -> SubBurnside {
    let classes = subgroup_classes(g, ambient);
    let mut class_of = BTreeMap::new();
    for (idx, class) in classes.iter().enumerate() {
        for &sid in class {
            class_of.insert(sid, idx);
        }
    }
    SubBurnside { classes, class_of }
}

/// Burnside element of the ambient group H: [H/U]·[H/V] = Σ over double
/// cosets UgV of [H / (U ∩ gVg⁻¹)] — the double-coset route, independent of
/// the marks route.
fn double_coset_product(
    g: &Group,
    ambient: &Subgroup,
    data: &SubBurnside,
    u_id: usize,
    v_id: usize,
) -> Vec<BigInt> {
    let subs = g.subgroups();
    let u = &subs[u_id];
    let v = &subs[v_id];
    let mut out = vec![BigInt::zero(); data.classes.len()];
    for f in ambient.double_coset_reps(u, v).expect("nested") {
        let meet = u.intersect(&v.conjugate(f));
        let meet_id = g.subgroup_id(&meet).expect("subgroup");
        out[data.class_of[&meet_id]] += 1;
    }
    out
}

/// The Burnside Green functor: at each subgroup H the free abelian group on
/// H-conjugacy classes of subgroups of H, with restriction by double-coset
/// orbit decomposition, induction by relabeling, and the double-coset
/// product as pairing.
pub fn burnside_green_functor(g: &Group) -> Result<GreenFunctor> {
    let subs = g.subgroups().to_vec();
    let data: Vec<SubBurnside> = subs.iter().map(|h| sub_burnside(g, h)).collect();
    let values: Vec<FgAbelianGroup> = data
        .iter()
        .map(|d| FgAbelianGroup::free(d.classes.len()))
        .collect();
    let mut res_mats = BTreeMap::new();
    let mut ind_mats = BTreeMap::new();
    for (j_id, j) in subs.iter().enumerate() {
        for (i_id, i) in subs.iter().enumerate() {
            if !i.is_subgroup_of(j) {
                continue;
            }
            let (di, dj) = (&data[i_id], &data[j_id]);
            // ind: [I/U] -> [J/U]
            let mut ind = IntMat::zeros(dj.classes.len(), di.classes.len());
            for (col, class) in di.classes.iter().enumerate() {
                let u_id = class[0];
                ind.set(dj.class_of[&u_id], col, BigInt::one());
            }
            ind_mats.insert((i_id, j_id), ind);
            // res: [J/U] -> Σ over I\J/U of [I/(I ∩ gUg⁻¹)]
            let mut res = IntMat::zeros(di.classes.len(), dj.classes.len());
            for (col, class) in dj.classes.iter().enumerate() {
                let u = &subs[class[0]];
                for f in j.double_coset_reps(i, u).expect("nested") {
                    let meet = i.intersect(&u.conjugate(f));
                    let meet_id = g.subgroup_id(&meet).expect("subgroup");
                    let row = di.class_of[&meet_id];
                    let cur = res.get(row, col) + BigInt::one();
                    res.set(row, col, cur);
                }
            }
            res_mats.insert((i_id, j_id), res);
        }
    }
    let mut conj_mats = BTreeMap::new();
    for f in g.elements() {
        for (h_id, h) in subs.iter().enumerate() {
            let target_id = g.subgroup_id(&h.conjugate(f)).expect("subgroup");
            let (dh, dt) = (&data[h_id], &data[target_id]);
            let mut m = IntMat::zeros(dt.classes.len(), dh.classes.len());
            for (col, class) in dh.classes.iter().enumerate() {
                let u = &subs[class[0]];
                let u_conj = g.subgroup_id(&u.conjugate(f)).expect("subgroup");
                m.set(dt.class_of[&u_conj], col, BigInt::one());
            }
            conj_mats.insert((f, h_id), m);
        }
    }
    let mackey = MackeyFunctor::new(g.clone(), values, res_mats, ind_mats, conj_mats)?;
    let mut pairing = Vec::new();
    let mut unit = Vec::new();
    for (h_id, h) in subs.iter().enumerate() {
        let d = &data[h_id];
        let n = d.classes.len();
        let mut products = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                products[a][b] =
                    double_coset_product(g, h, d, d.classes[a][0], d.classes[b][0]);
            }
        }
        pairing.push(PairingTable {
            left_gens: n,
            right_gens: n,
            products,
        });
        let mut u = vec![BigInt::zero(); n];
        let h_id_self = g.subgroup_id(h).expect("subgroup");
        u[d.class_of[&h_id_self]] = BigInt::one();
        unit.push(u);
    }
    Ok(GreenFunctor {
        mackey,
        pairing,
        unit,
    })
}

/// The order-torsion module over the Burnside Green functor: [H/U] acts on
/// Z/|H| as multiplication by the point count [H:U].
pub fn order_torsion_over_burnside(g: &Group) -> Result<GreenModule> {
    let green = burnside_green_functor(g)?;
    let module = MackeyFunctor::order_torsion(g);
    let subs = g.subgroups().to_vec();
    let action = subs
        .iter()
        .map(|h| {
            let d = sub_burnside(g, h);
            let n = d.classes.len();
            let products = (0..n)
                .map(|a| {
                    let u_order = g.subgroups()[d.classes[a][0]].order();
                    vec![vec![BigInt::from(h.order() / u_order)]]
                })
                .collect();
            PairingTable {
                left_gens: n,
                right_gens: 1,
                products,
            }
        })
        .collect();
    Ok(GreenModule {
        green,
        module,
        action,
    })
}

/// Rational-valued class function on element conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunction {
    pub values: Vec<BigInt>,
}

/// The permutation character of G acting on G/H: the value at the class of
/// g counts the cosets fixed by g.
pub fn perm_character(g: &Group, h: &Subgroup) -> ClassFunction {
    let full = g.full_subgroup();
    let coset_reps = full.left_coset_reps(h).expect("nested");
    let values = g
        .conjugacy_classes()
        .iter()
        .map(|class| {
            let x = class[0];
            let count = coset_reps
                .iter()
                .filter(|&&a| h.contains(g.mul(g.mul(g.inv(a), x), a)))
                .count();
            BigInt::from(count)
        })
        .collect();
    ClassFunction { values }
}

/// Artin certificate: n·1 = Σ a_C · Ind_C^G(1) over cyclic subgroup classes,
/// with n minimal positive.
#[derive(Clone, Debug, Serialize)]
pub struct ArtinCertificate {
    pub n: BigInt,
    /// (representative subgroup id, coefficient) per cyclic class.
    pub coefficients: Vec<(usize, BigInt)>,
}

/// Solves for the minimal n with n·1 in the integer span of the characters
/// induced from cyclic subgroups, and checks Artin's bound n | |G|.
pub fn artin_solve(g: &Group) -> Result<ArtinCertificate> {
    let full = g.full_subgroup();
    let cyclic_class_reps: Vec<usize> = subgroup_classes(g, &full)
        .into_iter()
        .filter(|class| g.subgroups()[class[0]].is_cyclic())
        .map(|class| class[0])
        .collect();
    let n_classes = g.conjugacy_classes().len();
    let chars: Vec<ClassFunction> = cyclic_class_reps
        .iter()
        .map(|&sid| perm_character(g, &g.subgroups()[sid]))
        .collect();
    let a = IntMat::from_fn(n_classes, chars.len(), |r, c| chars[c].values[r].clone());
    let ones = vec![BigInt::one(); n_classes];
    let (n, x) = a
        .snf()
        .minimal_denominator(&ones)
        .ok_or_else(|| Error::NoSolution("Artin system has no rational solution".into()))?;
    if !(BigInt::from(g.order() as u64) % &n).is_zero() {
        return Err(Error::NoSolution(format!(
            "minimal n = {n} does not divide the group order (implementation bug)"
        )));
    }
    // re-expansion must reproduce n·1 exactly
    let expanded = a.mul_vec(&x);
    let scaled: Vec<BigInt> = ones.iter().map(|o| o * &n).collect();
    if expanded != scaled {
        return Err(Error::NoSolution(
            "certificate does not re-expand to n·1 (implementation bug)".into(),
        ));
    }
    Ok(ArtinCertificate {
        n,
        coefficients: cyclic_class_reps.into_iter().zip(x).collect(),
    })
}

/// Verifies a supplied Artin identity n·1 = Σ a_C Ind_C(1) exactly.
pub fn artin_verify_identity(
    g: &Group,
    n: &BigInt,
    coefficients: &[(usize, BigInt)],
) -> Result<Outcome> {
    let n_classes = g.conjugacy_classes().len();
    let mut acc = vec![BigInt::zero(); n_classes];
    for (sid, coeff) in coefficients {
        let h = g
            .subgroups()
            .get(*sid)
            .ok_or_else(|| Error::InputError(format!("subgroup id {sid} out of range")))?;
        let ch = perm_character(g, h);
        for (k, v) in ch.values.iter().enumerate() {
            acc[k] += coeff * v;
        }
    }
    let ok = acc.iter().all(|v| v == n);
    Ok(if ok {
        Outcome::Pass { samples: n_classes }
    } else {
        Outcome::Fail {
            description: format!("expansion gives {acc:?} instead of {n}·1"),
        }
    })
}

/// The negative-certificate lemma: the mark at the class of G of anything
/// properly induced is zero, so the unit (mark 1 at G) cannot be induced
/// from proper subgroups.
pub fn zero_mark_at_top(g: &Group, t: &TableOfMarks) -> bool {
    let full_id = g.subgroup_id(&g.full_subgroup()).unwrap();
    let top_class = t.class_of(full_id).unwrap();
    for (row, class) in t.classes.iter().enumerate() {
        let h = &g.subgroups()[class[0]];
        if h.order() == g.order() {
            continue;
        }
        if !t.marks.get(row, top_class).is_zero() {
            return false;
        }
    }
    true
}
