//! The twisted group additive category: objects are finitely generated free
//! modules over a structure-constant algebra (identified by rank), morphisms
//! are finite formal sums Σ φ^g·g of matrices over the ring, and composition
//! twists the right factor through the group action:
//!
//!   (ψ∘φ)^g = Σ_{hk=g} σ_k(ψ^h) · φ^k
//!
//! A context fixes the acting group, the ring with its action, and a
//! designated subgroup that morphism supports must stay inside, which is how
//! the category over a subgroup sits inside the category over the whole
//! group.

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::zalgebra::{RMatrix, RingAction, ZAlgebra};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Category context: ring + action + designated support subgroup.
#[derive(Clone, Debug)]
pub struct TwistedCtx {
    action: RingAction,
    sub: Subgroup,
}

impl TwistedCtx {
    pub fn new(action: RingAction, sub: Subgroup) -> Result<TwistedCtx> {
        if sub.group() != action.group() {
            return Err(Error::GroupMismatch);
        }
        Ok(TwistedCtx { action, sub })
    }

    pub fn full(action: RingAction) -> TwistedCtx {
        let sub = action.group().full_subgroup();
        TwistedCtx { action, sub }
    }

    /// The same ring and action, constrained to another subgroup.
    pub fn over(&self, sub: Subgroup) -> TwistedCtx {
        TwistedCtx {
            action: self.action.clone(),
            sub,
        }
    }

    pub fn action(&self) -> &RingAction {
        &self.action
    }

    pub fn ring(&self) -> &Arc<ZAlgebra> {
        self.action.ring()
    }

    pub fn sub(&self) -> &Subgroup {
        &self.sub
    }

    pub fn group(&self) -> &crate::group::Group {
        self.action.group()
    }
}

/// A morphism A -> B between free modules of the given ranks.
///
/// The support map stores only nonzero components; construction prunes zero
/// matrices so that equality of morphisms is plain structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGMorphism {
    dom: usize,
    cod: usize,
    support: BTreeMap<Elem, RMatrix>,
}

impl TGMorphism {
    pub fn zero(dom: usize, cod: usize) -> TGMorphism {
        TGMorphism {
            dom,
            cod,
            support: BTreeMap::new(),
        }
    }

    pub fn identity(ctx: &TwistedCtx, rank: usize) -> TGMorphism {
        let mut support = BTreeMap::new();
        if rank > 0 {
            support.insert(
                ctx.group().identity(),
                RMatrix::identity(rank, ctx.ring()),
            );
        }
        TGMorphism {
            dom: rank,
            cod: rank,
            support,
        }
    }

    /// Builds from components, checking shapes and the support constraint.
    pub fn from_components(
        ctx: &TwistedCtx,
        dom: usize,
        cod: usize,
        components: BTreeMap<Elem, RMatrix>,
    ) -> Result<TGMorphism> {
        let mut support = BTreeMap::new();
        for (g, m) in components {
            if !ctx.sub.contains(g) {
                return Err(Error::SupportViolation { element: g });
            }
            if m.rows() != cod || m.cols() != dom {
                return Err(Error::DimensionMismatch {
                    expected: format!("{cod}x{dom}"),
                    got: format!("{}x{}", m.rows(), m.cols()),
                });
            }
            if !m.is_zero() {
                support.insert(g, m);
            }
        }
        Ok(TGMorphism { dom, cod, support })
    }

    /// Single-component morphism at group element `g`.
    pub fn single(ctx: &TwistedCtx, dom: usize, cod: usize, g: Elem, m: RMatrix) -> Result<TGMorphism> {
        let mut components = BTreeMap::new();
        components.insert(g, m);
        TGMorphism::from_components(ctx, dom, cod, components)
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn support(&self) -> impl Iterator<Item = (Elem, &RMatrix)> {
        self.support.iter().map(|(&g, m)| (g, m))
    }

    pub fn component(&self, g: Elem) -> Option<&RMatrix> {
        self.support.get(&g)
    }

    pub fn support_elems(&self) -> Vec<Elem> {
        self.support.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, other: &TGMorphism) -> Result<TGMorphism> {
        if (self.dom, self.cod) != (other.dom, other.cod) {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", self.cod, self.dom),
                got: format!("{}x{}", other.cod, other.dom),
            });
        }
        let mut support = self.support.clone();
        for (&g, m) in &other.support {
            let entry = match support.remove(&g) {
                Some(cur) => cur.add(m),
                None => m.clone(),
            };
            if !entry.is_zero() {
                support.insert(g, entry);
            }
        }
        Ok(TGMorphism {
            dom: self.dom,
            cod: self.cod,
            support,
        })
    }

    pub fn is_identity(&self, ctx: &TwistedCtx) -> bool {
        self.dom == self.cod && *self == TGMorphism::identity(ctx, self.dom)
    }
}

/// Composition per the twisted law; supports must lie in the context subgroup.
pub fn compose(ctx: &TwistedCtx, psi: &TGMorphism, phi: &TGMorphism) -> Result<TGMorphism> {
    if phi.cod != psi.dom {
        return Err(Error::DimensionMismatch {
            expected: format!("domain {}", phi.cod),
            got: format!("domain {}", psi.dom),
        });
    }
    for g in psi.support.keys().chain(phi.support.keys()) {
        if !ctx.sub.contains(*g) {
            return Err(Error::SupportViolation { element: *g });
        }
    }
    let group = ctx.group();
    let ring = ctx.ring();
    let mut acc: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    for (&h, mh) in &psi.support {
        for (&k, mk) in &phi.support {
            let g = group.mul(h, k);
            let term = mh.twist(ctx.action(), k).mul(ring, mk);
            match acc.remove(&g) {
                Some(cur) => {
                    let sum = cur.add(&term);
                    acc.insert(g, sum);
                }
                None => {
                    acc.insert(g, term);
                }
            }
        }
    }
    acc.retain(|_, m| !m.is_zero());
    Ok(TGMorphism {
        dom: phi.dom,
        cod: psi.cod,
        support: acc,
    })
}

/// Block-diagonal direct sum of parallel morphisms.
pub fn direct_sum(ctx: &TwistedCtx, phi1: &TGMorphism, phi2: &TGMorphism) -> TGMorphism {
    let dom = phi1.dom + phi2.dom;
    let cod = phi1.cod + phi2.cod;
    let mut support: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    let elems: std::collections::BTreeSet<Elem> = phi1
        .support
        .keys()
        .chain(phi2.support.keys())
        .copied()
        .collect();
    for g in elems {
        let mut m = RMatrix::zeros(cod, dom, ctx.ring());
        if let Some(b) = phi1.support.get(&g) {
            m.set_block(0, 0, b);
        }
        if let Some(b) = phi2.support.get(&g) {
            m.set_block(phi1.cod, phi1.dom, b);
        }
        support.insert(g, m);
    }
    TGMorphism { dom, cod, support }
}

/// True iff the two morphisms compose to the identity both ways.
pub fn verify_inverse_pair(ctx: &TwistedCtx, phi: &TGMorphism, psi: &TGMorphism) -> Result<bool> {
    if phi.dom != psi.cod || phi.cod != psi.dom {
        return Ok(false);
    }
    let a = compose(ctx, psi, phi)?;
    let b = compose(ctx, phi, psi)?;
    Ok(a.is_identity(ctx) && b.is_identity(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::zalgebra::ZAlgebra;
    use num::bigint::BigInt;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn gaussian_c2_ctx() -> TwistedCtx {
        let c2 = Group::builtin("C2").unwrap();
        let zi = ZAlgebra::builtin("Z[i]").unwrap();
        let action = RingAction::builtin(c2.clone(), zi).unwrap();
        TwistedCtx::full(action)
    }

    #[test]
    fn identity_composes_neutrally() {
        let ctx = gaussian_c2_ctx();
        let t = 1usize; // non-identity element of C2 in canonical order
        let m = RMatrix::from_fn(2, 2, |r, c| vec![bi(r as i64 + 1), bi(c as i64 - 1)]);
        let phi = TGMorphism::single(&ctx, 2, 2, t, m).unwrap();
        let id = TGMorphism::identity(&ctx, 2);
        assert_eq!(compose(&ctx, &id, &phi).unwrap(), phi);
        assert_eq!(compose(&ctx, &phi, &id).unwrap(), phi);
    }

    #[test]
    fn gaussian_scalar_i_at_t_squares_to_identity() {
        // ring Z[i], C2 acting by conjugation, φ = (scalar i at element t):
        // (φ∘φ)^e = σ_t(i)·i = (-i)(i) = 1
        let ctx = gaussian_c2_ctx();
        let ring = ctx.ring().clone();
        let mut m = RMatrix::zeros(1, 1, &ring);
        m.set(0, 0, vec![bi(0), bi(1)]);
        let t = 1usize;
        let phi = TGMorphism::single(&ctx, 1, 1, t, m).unwrap();
        let sq = compose(&ctx, &phi, &phi).unwrap();
        assert!(sq.is_identity(&ctx));
        assert!(verify_inverse_pair(&ctx, &phi, &phi).unwrap());
    }

    #[test]
    fn direct_sum_ranks_and_support() {
        let ctx = gaussian_c2_ctx();
        let ring = ctx.ring().clone();
        let a = TGMorphism::single(&ctx, 2, 2, 0, RMatrix::identity(2, &ring)).unwrap();
        let mut m = RMatrix::zeros(3, 3, &ring);
        m.set(0, 0, vec![bi(0), bi(1)]);
        let b = TGMorphism::single(&ctx, 3, 3, 1, m).unwrap();
        let s = direct_sum(&ctx, &a, &b);
        assert_eq!(s.dom(), 5);
        assert_eq!(s.cod(), 5);
        assert_eq!(s.support_elems(), vec![0, 1]);
        // zero-object morphism is neutral
        let z = TGMorphism::zero(0, 0);
        let s2 = direct_sum(&ctx, &a, &z);
        assert_eq!(s2.dom(), 2);
        assert_eq!(s2, a);
    }

    #[test]
    fn support_constraint_enforced() {
        let s3 = Group::builtin("S3").unwrap();
        let z = ZAlgebra::builtin("Z").unwrap();
        let action = RingAction::trivial(s3.clone(), z);
        let c3 = s3
            .subgroups()
            .iter()
            .find(|h| h.order() == 3)
            .unwrap()
            .clone();
        let ctx = TwistedCtx::new(action, c3.clone()).unwrap();
        let transposition = s3
            .elements()
            .find(|&g| !c3.contains(g))
            .unwrap();
        let m = RMatrix::identity(1, ctx.ring());
        match TGMorphism::single(&ctx, 1, 1, transposition, m) {
            Err(Error::SupportViolation { .. }) => {}
            other => panic!("expected SupportViolation, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_ranks_are_not_inverse() {
        let ctx = gaussian_c2_ctx();
        let ring = ctx.ring().clone();
        let a = TGMorphism::single(&ctx, 2, 2, 0, RMatrix::identity(2, &ring)).unwrap();
        let b = TGMorphism::single(&ctx, 1, 1, 0, RMatrix::identity(1, &ring)).unwrap();
        assert!(!verify_inverse_pair(&ctx, &a, &b).unwrap());
    }

    #[test]
    fn zero_matrices_are_pruned() {
        let ctx = gaussian_c2_ctx();
        let ring = ctx.ring().clone();
        let z = RMatrix::zeros(2, 2, &ring);
        let phi = TGMorphism::single(&ctx, 2, 2, 1, z).unwrap();
        assert!(phi.is_zero());
        assert!(phi.support_elems().is_empty());
    }
}
