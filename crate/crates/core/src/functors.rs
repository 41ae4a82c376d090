//! The explicit functors between twisted categories over nested subgroups:
//! induction (inclusion of supports), restriction (block matrices over coset
//! representatives), conjugation, and the pairing with integer lattices.
//! Also the explicit natural-isomorphism witnesses that make the
//! representative-choice independence checkable.
//!
//! Restriction block convention: for a representative system a_1..a_r of J/I,
//! the component of Res(φ) at i ∈ I is the r×r block matrix whose block in
//! row τ, column λ is σ_{a_λ}(φ^{a_τ i a_λ⁻¹}).

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::intmat::IntMat;
use crate::lattice::{LatMor, Lattice};
use crate::twisted::{compose, TGMorphism, TwistedCtx};
use crate::zalgebra::{RMatrix, RingAction};
use num::bigint::BigInt;
use std::collections::BTreeMap;

/// An ordered complete set of representatives for the left cosets of `sub`
/// in `sup`, with the coset-index lookup precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSystem {
    sup: Subgroup,
    sub: Subgroup,
    reps: Vec<Elem>,
    coset_of: BTreeMap<Elem, usize>,
}

impl RepSystem {
    /// Canonical system: the minimal element of each coset, identity first.
    pub fn canonical(sup: &Subgroup, sub: &Subgroup) -> Result<RepSystem> {
        let reps = sup.left_coset_reps(sub)?;
        RepSystem::with_reps(sup, sub, reps)
    }

    /// A user-chosen system; validated to hit every coset exactly once.
    pub fn with_reps(sup: &Subgroup, sub: &Subgroup, reps: Vec<Elem>) -> Result<RepSystem> {
        if !sub.is_subgroup_of(sup) {
            return Err(Error::NotNested {
                sub: sub.order(),
                sup: sup.order(),
            });
        }
        let group = sup.group().clone();
        let mut coset_of: BTreeMap<Elem, usize> = BTreeMap::new();
        for (idx, &a) in reps.iter().enumerate() {
            if !sup.contains(a) {
                return Err(Error::IncompatibleRepSystems(format!(
                    "representative {a} lies outside the larger subgroup"
                )));
            }
            for &i in sub.members() {
                if coset_of.insert(group.mul(a, i), idx).is_some() {
                    return Err(Error::IncompatibleRepSystems(
                        "two representatives share a coset".into(),
                    ));
                }
            }
        }
        if coset_of.len() != sup.order() {
            return Err(Error::IncompatibleRepSystems(
                "representatives do not cover all cosets".into(),
            ));
        }
        Ok(RepSystem {
            sup: sup.clone(),
            sub: sub.clone(),
            reps,
            coset_of,
        })
    }

    pub fn sup(&self) -> &Subgroup {
        &self.sup
    }

    pub fn sub(&self) -> &Subgroup {
        &self.sub
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn rep(&self, idx: usize) -> Elem {
        self.reps[idx]
    }

    pub fn coset_index(&self, g: Elem) -> Option<usize> {
        self.coset_of.get(&g).copied()
    }
}

/// Induction is the inclusion: data unchanged, support checked to lie in the
/// smaller subgroup.
pub fn ind_apply(sub: &Subgroup, sup: &Subgroup, phi: &TGMorphism) -> Result<TGMorphism> {
    if !sub.is_subgroup_of(sup) {
        return Err(Error::NotNested {
            sub: sub.order(),
            sup: sup.order(),
        });
    }
    for g in phi.support_elems() {
        if !sub.contains(g) {
            return Err(Error::SupportViolation { element: g });
        }
    }
    Ok(phi.clone())
}

pub fn res_rank(rs: &RepSystem, rank: usize) -> usize {
    rs.index() * rank
}

/// Restriction along a representative system.
pub fn res_apply(action: &RingAction, rs: &RepSystem, phi: &TGMorphism) -> Result<TGMorphism> {
    let group = action.group().clone();
    let ring = action.ring().clone();
    let r = rs.index();
    let (n_dom, n_cod) = (phi.dom(), phi.cod());
    let mut acc: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    for (j, mj) in phi.support() {
        if rs.coset_index(j).is_none() {
            return Err(Error::SupportViolation { element: j });
        }
        for lam in 0..r {
            let a_lam = rs.rep(lam);
            let ja = group.mul(j, a_lam);
            let tau = rs.coset_index(ja).expect("support inside sup");
            let i = group.mul(group.inv(rs.rep(tau)), ja);
            let block = mj.twist(action, a_lam);
            acc.entry(i)
                .or_insert_with(|| RMatrix::zeros(r * n_cod, r * n_dom, &ring))
                .set_block(tau * n_cod, lam * n_dom, &block);
        }
    }
    acc.retain(|_, m| !m.is_zero());
    let mut out = TGMorphism::zero(r * n_dom, r * n_cod);
    for (i, m) in acc {
        let single = TGMorphism::from_components(
            &TwistedCtx::new(action.clone(), rs.sub().clone())?,
            r * n_dom,
            r * n_cod,
            BTreeMap::from([(i, m)]),
        )?;
        out = out.add(&single)?;
    }
    Ok(out)
}

/// Conjugation by f: a morphism over I becomes one over fIf⁻¹, with the
/// component at f i f⁻¹ equal to σ_{f⁻¹}(φ^i).
pub fn conj_apply(
    action: &RingAction,
    sub: &Subgroup,
    f: Elem,
    phi: &TGMorphism,
) -> Result<(Subgroup, TGMorphism)> {
    let group = action.group().clone();
    for g in phi.support_elems() {
        if !sub.contains(g) {
            return Err(Error::SupportViolation { element: g });
        }
    }
    let target = sub.conjugate(f);
    let f_inv = group.inv(f);
    let mut components = BTreeMap::new();
    for (i, m) in phi.support() {
        components.insert(group.conj(f, i), m.twist(action, f_inv));
    }
    let ctx = TwistedCtx::new(action.clone(), target.clone())?;
    let out = TGMorphism::from_components(&ctx, phi.dom(), phi.cod(), components)?;
    Ok((target, out))
}

/// The pairing with a lattice morphism: Θ(M, φ)^i = (M·β1(i)) ⊗ φ^i, with
/// the integer factor outer.
pub fn theta_apply(action: &RingAction, m: &LatMor, phi: &TGMorphism) -> Result<TGMorphism> {
    let sub = m.src.sub().clone();
    for g in phi.support_elems() {
        if !sub.contains(g) {
            return Err(Error::SupportViolation { element: g });
        }
    }
    let (m1, m2) = (m.src.rank(), m.dst.rank());
    let mut components = BTreeMap::new();
    for (i, phi_i) in phi.support() {
        let c = m.matrix.mul(m.src.matrix(i));
        components.insert(i, RMatrix::int_kronecker(&c, phi_i));
    }
    let ctx = TwistedCtx::new(action.clone(), sub)?;
    TGMorphism::from_components(&ctx, m1 * phi.dom(), m2 * phi.cod(), components)
}

/// The object part of Θ(L, −): A ↦ A^rank(L).
pub fn theta_rank(l: &Lattice, rank: usize) -> usize {
    l.rank() * rank
}

/// The explicit isomorphism ξ_A between the restrictions along two
/// representative systems that differ by right multiples from the subgroup,
/// paired with its inverse.
pub fn xi_witness(
    action: &RingAction,
    rs1: &RepSystem,
    rs2: &RepSystem,
    rank: usize,
) -> Result<(TGMorphism, TGMorphism)> {
    if rs1.sup() != rs2.sup() || rs1.sub() != rs2.sub() {
        return Err(Error::IncompatibleRepSystems(
            "systems are over different subgroup pairs".into(),
        ));
    }
    let group = action.group().clone();
    let ring = action.ring().clone();
    let r = rs1.index();
    for tau in 0..r {
        if rs1.coset_index(rs2.rep(tau)) != Some(tau) {
            return Err(Error::IncompatibleRepSystems(
                "representatives do not match coset-by-coset".into(),
            ));
        }
    }
    let ctx = TwistedCtx::new(action.clone(), rs1.sub().clone())?;
    let total = r * rank;
    let mut fwd: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    let mut bwd: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    for tau in 0..r {
        let i_tau = group.mul(group.inv(rs1.rep(tau)), rs2.rep(tau));
        let unit = RMatrix::identity(rank, &ring);
        fwd.entry(group.inv(i_tau))
            .or_insert_with(|| RMatrix::zeros(total, total, &ring))
            .set_block(tau * rank, tau * rank, &unit);
        bwd.entry(i_tau)
            .or_insert_with(|| RMatrix::zeros(total, total, &ring))
            .set_block(tau * rank, tau * rank, &unit);
    }
    Ok((
        TGMorphism::from_components(&ctx, total, total, fwd)?,
        TGMorphism::from_components(&ctx, total, total, bwd)?,
    ))
}

/// The isomorphism η_A: identity concentrated at f ∈ I, witnessing that
/// conjugation by an inner element is naturally the identity functor.
pub fn eta_witness(
    action: &RingAction,
    sub: &Subgroup,
    f: Elem,
    rank: usize,
) -> Result<(TGMorphism, TGMorphism)> {
    let ctx = TwistedCtx::new(action.clone(), sub.clone())?;
    let ring = action.ring().clone();
    let id = RMatrix::identity(rank, &ring);
    let fwd = TGMorphism::single(&ctx, rank, rank, f, id.clone())?;
    let bwd = TGMorphism::single(&ctx, rank, rank, action.group().inv(f), id)?;
    Ok((fwd, bwd))
}

/// The isomorphism ω_A: Θ_J(Ind L, A) → Ind_I^J(Θ_I(L, Res_I^J A)):
/// diagonal identity blocks spread across the representatives' inverses.
/// Used by the shared-representative Frobenius law and the
/// regular-representation identity.
pub fn induction_theta_witness(
    action: &RingAction,
    rs: &RepSystem,
    lat_rank: usize,
    rank: usize,
) -> Result<(TGMorphism, TGMorphism)> {
    let group = action.group().clone();
    let ring = action.ring().clone();
    let r = rs.index();
    let total = lat_rank * r * rank;
    let ctx = TwistedCtx::new(action.clone(), rs.sup().clone())?;
    let mut fwd: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    let mut bwd: BTreeMap<Elem, RMatrix> = BTreeMap::new();
    for lam in 0..r {
        let e_ll = IntMat::from_fn(r, r, |a, b| {
            if a == lam && b == lam {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        });
        let d = IntMat::identity(lat_rank).kronecker(&e_ll);
        let block = RMatrix::int_kronecker(&d, &RMatrix::identity(rank, &ring));
        let a_lam = rs.rep(lam);
        let fwd_entry = fwd
            .entry(group.inv(a_lam))
            .or_insert_with(|| RMatrix::zeros(total, total, &ring));
        *fwd_entry = fwd_entry.add(&block);
        let bwd_entry = bwd
            .entry(a_lam)
            .or_insert_with(|| RMatrix::zeros(total, total, &ring));
        *bwd_entry = bwd_entry.add(&block);
    }
    Ok((
        TGMorphism::from_components(&ctx, total, total, fwd)?,
        TGMorphism::from_components(&ctx, total, total, bwd)?,
    ))
}

/// Verifies a naturality square `after ∘ top = bottom ∘ before` in the given
/// context.
pub fn square_commutes(
    ctx: &TwistedCtx,
    top: &TGMorphism,
    after: &TGMorphism,
    before: &TGMorphism,
    bottom: &TGMorphism,
) -> Result<bool> {
    let lhs = compose(ctx, after, top)?;
    let rhs = compose(ctx, bottom, before)?;
    Ok(lhs == rhs)
}

/// Descriptor of a composite functor for the rank-level shadow.
#[derive(Clone, Debug)]
pub enum FunctorDescriptor {
    Ind,
    /// Restriction along an index-r inclusion.
    Res { index: usize },
    Conj,
    /// Pairing with a lattice of the given rank.
    Theta { rank: usize },
    Composite(Vec<FunctorDescriptor>),
}

/// The factor by which the functor scales object ranks.
pub fn k0_multiplier(d: &FunctorDescriptor) -> BigInt {
    match d {
        FunctorDescriptor::Ind | FunctorDescriptor::Conj => BigInt::from(1),
        FunctorDescriptor::Res { index } => BigInt::from(*index as u64),
        FunctorDescriptor::Theta { rank } => BigInt::from(*rank as u64),
        FunctorDescriptor::Composite(parts) => parts.iter().map(k0_multiplier).product(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::sampling::Sampler;
    use crate::zalgebra::ZAlgebra;

    fn s3_gaussian() -> (Group, RingAction) {
        let g = Group::builtin("S3").unwrap();
        let ring = ZAlgebra::builtin("Z[i]").unwrap();
        let action = RingAction::builtin(g.clone(), ring).unwrap();
        (g, action)
    }

    fn sub_of_order(g: &Group, n: usize) -> Subgroup {
        g.subgroups().iter().find(|h| h.order() == n).unwrap().clone()
    }

    #[test]
    fn rep_system_canonical_starts_with_identity() {
        let (g, _) = s3_gaussian();
        let rs = RepSystem::canonical(&g.full_subgroup(), &sub_of_order(&g, 3)).unwrap();
        assert_eq!(rs.index(), 2);
        assert_eq!(rs.rep(0), g.identity());
    }

    #[test]
    fn rep_system_rejects_bad_choices() {
        let (g, _) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let full = g.full_subgroup();
        // two representatives of the same coset
        let bad = RepSystem::with_reps(&full, &c3, vec![g.identity(), g.identity()]);
        assert!(bad.is_err());
        let short = RepSystem::with_reps(&full, &c3, vec![g.identity()]);
        assert!(short.is_err());
    }

    #[test]
    fn ind_preserves_data_and_checks_support() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let ctx_i = TwistedCtx::new(action.clone(), c3.clone()).unwrap();
        let mut s = Sampler::new(3);
        let phi = s.morphism(&ctx_i, 2, 2);
        let out = ind_apply(&c3, &g.full_subgroup(), &phi).unwrap();
        assert_eq!(out, phi);
        // functoriality on composable samples
        let psi = s.morphism(&ctx_i, 2, 3);
        let comp = compose(&ctx_i, &psi, &phi).unwrap();
        let ctx_j = TwistedCtx::full(action.clone());
        let lhs = ind_apply(&c3, &g.full_subgroup(), &comp).unwrap();
        let rhs = compose(
            &ctx_j,
            &ind_apply(&c3, &g.full_subgroup(), &psi).unwrap(),
            &ind_apply(&c3, &g.full_subgroup(), &phi).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn res_same_subgroup_is_identity_functor() {
        let (g, action) = s3_gaussian();
        let full = g.full_subgroup();
        let rs = RepSystem::canonical(&full, &full).unwrap();
        let ctx = TwistedCtx::full(action.clone());
        let mut s = Sampler::new(5);
        for _ in 0..10 {
            let phi = s.morphism(&ctx, 2, 2);
            assert_eq!(res_apply(&action, &rs, &phi).unwrap(), phi);
        }
    }

    #[test]
    fn res_of_identity_is_identity() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let rs = RepSystem::canonical(&g.full_subgroup(), &c3).unwrap();
        let ctx_j = TwistedCtx::full(action.clone());
        let ctx_i = TwistedCtx::new(action.clone(), c3).unwrap();
        let id = TGMorphism::identity(&ctx_j, 3);
        let res = res_apply(&action, &rs, &id).unwrap();
        assert!(res.is_identity(&ctx_i));
    }

    /// Hand-expanded oracle for the block formula: G = C2, I = 1,
    /// φ = φ^e·e + φ^t·t restricts to the single 2x2 block matrix
    /// [[φ^e, σ_t(φ^t)], [φ^t, σ_t(φ^e)]] concentrated at the identity.
    #[test]
    fn res_block_formula_c2_oracle() {
        let c2 = Group::builtin("C2").unwrap();
        let ring = ZAlgebra::builtin("Z[i]").unwrap();
        let action = RingAction::builtin(c2.clone(), ring.clone()).unwrap();
        let triv = c2.trivial_subgroup();
        let full = c2.full_subgroup();
        let rs = RepSystem::canonical(&full, &triv).unwrap();
        assert_eq!(rs.reps(), &[0, 1]);
        let ctx = TwistedCtx::full(action.clone());
        let mut s = Sampler::new(9);
        for _ in 0..20 {
            let phi = s.morphism(&ctx, 1, 1);
            let res = res_apply(&action, &rs, &phi).unwrap();
            let t = 1usize;
            let zero = RMatrix::zeros(1, 1, &ring);
            let pe = phi.component(c2.identity()).cloned().unwrap_or_else(|| zero.clone());
            let pt = phi.component(t).cloned().unwrap_or_else(|| zero.clone());
            let mut expected = RMatrix::zeros(2, 2, &ring);
            expected.set_block(0, 0, &pe);
            expected.set_block(0, 1, &pt.twist(&action, t));
            expected.set_block(1, 0, &pt);
            expected.set_block(1, 1, &pe.twist(&action, t));
            if expected.is_zero() {
                assert!(res.is_zero());
            } else {
                assert_eq!(res.support_elems(), vec![c2.identity()]);
                assert_eq!(res.component(c2.identity()).unwrap(), &expected);
            }
        }
    }

    #[test]
    fn res_is_functorial_on_samples() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let rs = RepSystem::canonical(&g.full_subgroup(), &c3).unwrap();
        let ctx_j = TwistedCtx::full(action.clone());
        let ctx_i = TwistedCtx::new(action.clone(), c3).unwrap();
        let mut s = Sampler::new(11);
        for _ in 0..25 {
            let phi = s.morphism(&ctx_j, 2, 2);
            let psi = s.morphism(&ctx_j, 2, 2);
            let lhs = res_apply(&action, &rs, &compose(&ctx_j, &psi, &phi).unwrap()).unwrap();
            let rhs = compose(
                &ctx_i,
                &res_apply(&action, &rs, &psi).unwrap(),
                &res_apply(&action, &rs, &phi).unwrap(),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conj_by_identity_is_identity_functor() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let ctx = TwistedCtx::new(action.clone(), c3.clone()).unwrap();
        let mut s = Sampler::new(13);
        let phi = s.morphism(&ctx, 2, 3);
        let (target, out) = conj_apply(&action, &c3, g.identity(), &phi).unwrap();
        assert_eq!(target, c3);
        assert_eq!(out, phi);
    }

    #[test]
    fn conj_moves_support() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let ctx = TwistedCtx::new(action.clone(), c3.clone()).unwrap();
        let mut s = Sampler::new(17);
        for f in g.elements() {
            let phi = s.morphism(&ctx, 2, 2);
            let (_, out) = conj_apply(&action, &c3, f, &phi).unwrap();
            let expected: Vec<Elem> = {
                let mut v: Vec<Elem> =
                    phi.support_elems().iter().map(|&i| g.conj(f, i)).collect();
                v.sort_unstable();
                v
            };
            assert_eq!(out.support_elems(), expected);
        }
    }

    #[test]
    fn conj_composes() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let ctx = TwistedCtx::new(action.clone(), c3.clone()).unwrap();
        let mut s = Sampler::new(19);
        for f in g.elements() {
            for h in g.elements() {
                let phi = s.morphism(&ctx, 2, 2);
                let (mid, inner) = conj_apply(&action, &c3, h, &phi).unwrap();
                let (t1, lhs) = conj_apply(&action, &mid, f, &inner).unwrap();
                let (t2, rhs) = conj_apply(&action, &c3, g.mul(f, h), &phi).unwrap();
                assert_eq!(t1, t2);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn xi_identity_when_systems_match() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let rs = RepSystem::canonical(&g.full_subgroup(), &c3).unwrap();
        let ctx_i = TwistedCtx::new(action.clone(), c3).unwrap();
        let (xi, _) = xi_witness(&action, &rs, &rs, 2).unwrap();
        assert!(xi.is_identity(&ctx_i));
    }

    #[test]
    fn xi_invertible_and_natural() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let full = g.full_subgroup();
        let rs1 = RepSystem::canonical(&full, &c3).unwrap();
        // twist the second representative by a right I-multiple
        let c3_gen = *c3.members().iter().find(|&&m| m != g.identity()).unwrap();
        let reps2 = vec![rs1.rep(0), g.mul(rs1.rep(1), c3_gen)];
        let rs2 = RepSystem::with_reps(&full, &c3, reps2).unwrap();
        let ctx_i = TwistedCtx::new(action.clone(), c3.clone()).unwrap();
        let ctx_j = TwistedCtx::full(action.clone());
        let mut s = Sampler::new(23);
        for _ in 0..100 {
            let dom = s.rank(2);
            let cod = s.rank(2);
            let phi = s.morphism(&ctx_j, dom, cod);
            let (xi_a, xi_a_inv) = xi_witness(&action, &rs1, &rs2, dom).unwrap();
            let (xi_b, _) = xi_witness(&action, &rs1, &rs2, cod).unwrap();
            assert!(crate::twisted::verify_inverse_pair(&ctx_i, &xi_a, &xi_a_inv).unwrap());
            let top = res_apply(&action, &rs1, &phi).unwrap();
            let bottom = res_apply(&action, &rs2, &phi).unwrap();
            assert!(square_commutes(&ctx_i, &top, &xi_b, &xi_a, &bottom).unwrap());
        }
    }

    #[test]
    fn eta_natural_for_inner_elements() {
        let (g, action) = s3_gaussian();
        let c3 = sub_of_order(&g, 3);
        let ctx = TwistedCtx::new(action.clone(), c3.clone()).unwrap();
        let mut s = Sampler::new(29);
        for &f in c3.members() {
            for _ in 0..20 {
                let dom = s.rank(2);
                let cod = s.rank(2);
                let phi = s.morphism(&ctx, dom, cod);
                let (eta_a, eta_a_inv) = eta_witness(&action, &c3, f, dom).unwrap();
                let (eta_b, _) = eta_witness(&action, &c3, f, cod).unwrap();
                assert!(crate::twisted::verify_inverse_pair(&ctx, &eta_a, &eta_a_inv).unwrap());
                let (_, conj_phi) = conj_apply(&action, &c3, f, &phi).unwrap();
                // conjugation by f ∈ I stays inside I
                assert!(square_commutes(&ctx, &phi, &eta_b, &eta_a, &conj_phi).unwrap());
            }
        }
    }

    #[test]
    fn theta_with_trivial_rank_one_lattice_is_identity() {
        let (g, action) = s3_gaussian();
        let full = g.full_subgroup();
        let one = Lattice::trivial(full.clone(), 1);
        let id = LatMor::identity(&one);
        let ctx = TwistedCtx::full(action.clone());
        let mut s = Sampler::new(31);
        for _ in 0..10 {
            let phi = s.morphism(&ctx, 2, 2);
            assert_eq!(theta_apply(&action, &id, &phi).unwrap(), phi);
        }
    }

    #[test]
    fn theta_with_trivial_lattice_is_diagonal_copies() {
        let (g, action) = s3_gaussian();
        let full = g.full_subgroup();
        let three = Lattice::trivial(full.clone(), 3);
        let id = LatMor::identity(&three);
        let ctx = TwistedCtx::full(action.clone());
        let mut s = Sampler::new(37);
        let phi = s.morphism(&ctx, 1, 1);
        let out = theta_apply(&action, &id, &phi).unwrap();
        assert_eq!(out.dom(), 3);
        for (gx, m) in out.support() {
            let src = phi.component(gx).unwrap();
            for a in 0..3 {
                for b in 0..3 {
                    let block = m.get_block(a, b, 1, 1);
                    if a == b {
                        assert_eq!(&block, src);
                    } else {
                        assert!(block.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn theta_bifunctorial_on_samples() {
        let (g, action) = s3_gaussian();
        let full = g.full_subgroup();
        let reg = Lattice::regular(full.clone());
        let ctx = TwistedCtx::full(action.clone());
        let mut s = Sampler::new(41);
        for _ in 0..15 {
            let m1 = s.lattice_morphism(&reg, &reg);
            let m2 = s.lattice_morphism(&reg, &reg);
            let phi = s.morphism(&ctx, 1, 2);
            let psi = s.morphism(&ctx, 2, 1);
            let lhs = theta_apply(&action, &m2.compose(&m1), &compose(&ctx, &psi, &phi).unwrap())
                .unwrap();
            let rhs = compose(
                &ctx,
                &theta_apply(&action, &m2, &psi).unwrap(),
                &theta_apply(&action, &m1, &phi).unwrap(),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn k0_multiplier_examples() {
        assert_eq!(k0_multiplier(&FunctorDescriptor::Ind), BigInt::from(1));
        assert_eq!(
            k0_multiplier(&FunctorDescriptor::Res { index: 3 }),
            BigInt::from(3)
        );
        assert_eq!(
            k0_multiplier(&FunctorDescriptor::Theta { rank: 6 }),
            BigInt::from(6)
        );
        let composite = FunctorDescriptor::Composite(vec![
            FunctorDescriptor::Res { index: 2 },
            FunctorDescriptor::Theta { rank: 3 },
            FunctorDescriptor::Conj,
        ]);
        assert_eq!(k0_multiplier(&composite), BigInt::from(6));
    }
}
