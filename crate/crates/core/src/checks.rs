//! Extensional verification of the Mackey axioms, the Frobenius reciprocity
//! laws, representative-choice independence, and the regular-representation
//! identity, over sampled objects and morphisms.
//!
//! Equality of functors is tested as strict equality of morphism data on
//! seeded samples. Axioms that hold only for compatible representative
//! systems construct those systems explicitly: products for transitivity of
//! restriction, orbit decompositions for the double coset formula.

use crate::error::Result;
use crate::functors::{
    conj_apply, eta_witness, ind_apply, induction_theta_witness, k0_multiplier, res_apply,
    square_commutes, theta_apply, xi_witness, FunctorDescriptor, RepSystem,
};
use crate::group::{Elem, Group, Subgroup};
use crate::lattice::{LatMor, Lattice};
use crate::sampling::Sampler;
use crate::twisted::{direct_sum, verify_inverse_pair, TGMorphism, TwistedCtx};
use crate::zalgebra::RingAction;
use num::bigint::BigInt;
use rand::Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub enum Outcome {
    Pass { samples: usize },
    Fail { description: String },
    HypothesisFailure { description: String },
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass { .. })
    }

    pub fn failed(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug)]
pub struct SampleCfg {
    pub seed: u64,
    pub samples: usize,
    pub max_rank: usize,
}

impl Default for SampleCfg {
    fn default() -> Self {
        SampleCfg {
            seed: 7,
            samples: 4,
            max_rank: 2,
        }
    }
}

fn fail(description: impl Into<String>) -> Outcome {
    Outcome::Fail {
        description: description.into(),
    }
}

/// Axiom (1): induction, restriction and inner conjugation along the same
/// subgroup are the identity (conjugation up to the explicit witness η).
pub fn axiom1_identity(action: &RingAction, i: &Subgroup, cfg: &SampleCfg) -> Result<Outcome> {
    let ctx = TwistedCtx::new(action.clone(), i.clone())?;
    let rs = RepSystem::canonical(i, i)?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx, dom, cod);
        if ind_apply(i, i, &phi)? != phi {
            return Ok(fail("Ind_I^I is not the identity"));
        }
        if res_apply(action, &rs, &phi)? != phi {
            return Ok(fail("Res_I^I is not the identity"));
        }
        for &f in i.members() {
            let (eta_a, eta_a_inv) = eta_witness(action, i, f, dom)?;
            let (eta_b, _) = eta_witness(action, i, f, cod)?;
            if !verify_inverse_pair(&ctx, &eta_a, &eta_a_inv)? {
                return Ok(fail(format!("η witness for f={f} is not invertible")));
            }
            let (_, conj_phi) = conj_apply(action, i, f, &phi)?;
            if !square_commutes(&ctx, &phi, &eta_b, &eta_a, &conj_phi)? {
                return Ok(fail(format!("η naturality fails for f={f}")));
            }
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Axiom (2): Res_I^J ∘ Res_J^K = Res_I^K, strict with the product system
/// (the composite slot (ν, μ) carries the representative a_μ·b_ν).
pub fn axiom2_res_transitive(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    k: &Subgroup,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let group = action.group().clone();
    let rs_kj = RepSystem::canonical(k, j)?;
    let rs_ji = RepSystem::canonical(j, i)?;
    let mut product = Vec::with_capacity(rs_kj.index() * rs_ji.index());
    for nu in 0..rs_ji.index() {
        for mu in 0..rs_kj.index() {
            product.push(group.mul(rs_kj.rep(mu), rs_ji.rep(nu)));
        }
    }
    let rs_ki = RepSystem::with_reps(k, i, product)?;
    let ctx_k = TwistedCtx::new(action.clone(), k.clone())?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_k, dom, cod);
        let step = res_apply(action, &rs_kj, &phi)?;
        let lhs = res_apply(action, &rs_ji, &step)?;
        let rhs = res_apply(action, &rs_ki, &phi)?;
        if lhs != rhs {
            return Ok(fail("Res∘Res differs from Res with the product system"));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Axiom (3): Ind_J^K ∘ Ind_I^J = Ind_I^K.
pub fn axiom3_ind_transitive(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    k: &Subgroup,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let ctx_i = TwistedCtx::new(action.clone(), i.clone())?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_i, dom, cod);
        let lhs = ind_apply(j, k, &ind_apply(i, j, &phi)?)?;
        let rhs = ind_apply(i, k, &phi)?;
        if lhs != rhs {
            return Ok(fail("Ind∘Ind differs from Ind"));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Axiom (4): c_f ∘ c_g = c_{fg}.
pub fn axiom4_conj_composes(
    action: &RingAction,
    i: &Subgroup,
    f: Elem,
    g: Elem,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let group = action.group().clone();
    let ctx = TwistedCtx::new(action.clone(), i.clone())?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx, dom, cod);
        let (mid, inner) = conj_apply(action, i, g, &phi)?;
        let (t1, lhs) = conj_apply(action, &mid, f, &inner)?;
        let (t2, rhs) = conj_apply(action, i, group.mul(f, g), &phi)?;
        if t1 != t2 || lhs != rhs {
            return Ok(fail(format!("c_{f}∘c_{g} ≠ c_(fg)")));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Axiom (5): restriction commutes with conjugation, using the conjugated
/// representative system on the left side.
pub fn axiom5_res_conj(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    f: Elem,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let group = action.group().clone();
    let rs = RepSystem::canonical(j, i)?;
    let i_conj = i.conjugate(f);
    let j_conj = j.conjugate(f);
    let conj_reps: Vec<Elem> = rs.reps().iter().map(|&a| group.conj(f, a)).collect();
    let rs_conj = RepSystem::with_reps(&j_conj, &i_conj, conj_reps)?;
    let ctx_j = TwistedCtx::new(action.clone(), j.clone())?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_j, dom, cod);
        let (_, conj_phi) = conj_apply(action, j, f, &phi)?;
        let lhs = res_apply(action, &rs_conj, &conj_phi)?;
        let (_, rhs) = conj_apply(action, i, f, &res_apply(action, &rs, &phi)?)?;
        if lhs != rhs {
            return Ok(fail(format!("Res∘c_{f} ≠ c_{f}∘Res")));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Axiom (6): induction commutes with conjugation.
pub fn axiom6_ind_conj(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    f: Elem,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let i_conj = i.conjugate(f);
    let j_conj = j.conjugate(f);
    let ctx_i = TwistedCtx::new(action.clone(), i.clone())?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_i, dom, cod);
        let (_, conj_phi) = conj_apply(action, i, f, &phi)?;
        let lhs = ind_apply(&i_conj, &j_conj, &conj_phi)?;
        let (_, rhs) = conj_apply(action, j, f, &ind_apply(i, j, &phi)?)?;
        if lhs != rhs {
            return Ok(fail(format!("Ind∘c_{f} ≠ c_{f}∘Ind")));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Axiom (7), the double coset formula: with representatives f_λ of J\K/I
/// and the representative system of K/J assembled from orbit decompositions
/// {a_(λt)·f_λ⁻¹}, the two sides agree strictly.
pub fn axiom7_double_coset(
    action: &RingAction,
    k: &Subgroup,
    j: &Subgroup,
    i: &Subgroup,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let group = action.group().clone();
    let dc = k.double_coset_reps(j, i)?;
    let mut orbit_systems = Vec::new();
    let mut kj_reps = Vec::new();
    for &f in &dc {
        let f_inv = group.inv(f);
        let meet = j.conjugate(f_inv).intersect(i); // f⁻¹Jf ∩ I
        let rs = RepSystem::canonical(i, &meet)?;
        for &a in rs.reps() {
            kj_reps.push(group.mul(a, f_inv));
        }
        orbit_systems.push((f, meet, rs));
    }
    let rs_kj = RepSystem::with_reps(k, j, kj_reps)?;
    // rank-level double coset identity comes for free from the construction
    let lhs_index = BigInt::from(rs_kj.index() as u64);
    let rhs_index: BigInt = orbit_systems
        .iter()
        .map(|(_, _, rs)| BigInt::from(rs.index() as u64))
        .sum();
    if lhs_index != rhs_index {
        return Ok(fail("rank-level double coset identity fails"));
    }
    let ctx_i = TwistedCtx::new(action.clone(), i.clone())?;
    let ctx_j = TwistedCtx::new(action.clone(), j.clone())?;
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_i, dom, cod);
        let lhs = res_apply(action, &rs_kj, &ind_apply(i, k, &phi)?)?;
        let mut rhs = TGMorphism::zero(0, 0);
        for (f, meet, rs) in &orbit_systems {
            let rho = res_apply(action, rs, &phi)?;
            let (target, conj_rho) = conj_apply(action, meet, *f, &rho)?;
            let part = ind_apply(&target, j, &conj_rho)?;
            rhs = direct_sum(&ctx_j, &rhs, &part);
        }
        if lhs != rhs {
            return Ok(fail("double coset formula fails strictly"));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

fn lattice_pool(sub: &Subgroup) -> Vec<Lattice> {
    vec![
        Lattice::trivial(sub.clone(), 1),
        Lattice::trivial(sub.clone(), 2),
        Lattice::regular(sub.clone()),
    ]
}

/// Frobenius law (5.1): pairing after restriction of the lattice equals
/// pairing after induction of the category morphism — strict equality of the
/// two composites.
pub fn frobenius_law1(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let ctx_i = TwistedCtx::new(action.clone(), i.clone())?;
    let pool = lattice_pool(j);
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let l1 = &pool[s.rank(pool.len() - 1)];
        let l2 = &pool[s.rank(pool.len() - 1)];
        let m = s.lattice_morphism(l1, l2);
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_i, dom, cod);
        let m_res = m.restrict(i)?;
        let lhs = ind_apply(i, j, &theta_apply(action, &m_res, &phi)?)?;
        let rhs = theta_apply(action, &m, &ind_apply(i, j, &phi)?)?;
        if lhs != rhs {
            return Ok(fail("Frobenius law 1 fails strictly"));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Frobenius law (5.2) with a representative system shared between lattice
/// induction and category restriction: the two composites have equal rank
/// multipliers and are intertwined strictly by the explicit witness ω.
pub fn frobenius_law2(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let rs = RepSystem::canonical(j, i)?;
    let ctx_j = TwistedCtx::new(action.clone(), j.clone())?;
    let pool = lattice_pool(i);
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let l1 = &pool[s.rank(pool.len() - 1)];
        let l2 = &pool[s.rank(pool.len() - 1)];
        let m = s.lattice_morphism(l1, l2);
        let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
        let phi = s.morphism(&ctx_j, dom, cod);
        // rank multipliers agree exactly
        let lhs_k0 = k0_multiplier(&FunctorDescriptor::Composite(vec![
            FunctorDescriptor::Res { index: rs.index() },
            FunctorDescriptor::Theta { rank: l1.rank() },
            FunctorDescriptor::Ind,
        ]));
        let rhs_k0 = k0_multiplier(&FunctorDescriptor::Theta {
            rank: l1.rank() * rs.index(),
        });
        if lhs_k0 != rhs_k0 {
            return Ok(fail("rank multipliers differ in Frobenius law 2"));
        }
        let lhs = ind_apply(i, j, &theta_apply(action, &m, &res_apply(action, &rs, &phi)?)?)?;
        let m_ind = m.induce(j, rs.reps())?;
        let rhs = theta_apply(action, &m_ind, &phi)?;
        let (omega_a, omega_a_inv) = induction_theta_witness(action, &rs, l1.rank(), dom)?;
        let (omega_b, _) = induction_theta_witness(action, &rs, l2.rank(), cod)?;
        if !verify_inverse_pair(&ctx_j, &omega_a, &omega_a_inv)? {
            return Ok(fail("ω witness is not invertible"));
        }
        if !square_commutes(&ctx_j, &rhs, &omega_b, &omega_a, &lhs)? {
            return Ok(fail("Frobenius law 2 square fails strictly"));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

/// Representative-choice independence for one nested pair: distinct systems
/// produced by right subgroup multiples give invertible natural ξ witnesses
/// and identical rank multipliers.
pub fn choice_independence(
    action: &RingAction,
    i: &Subgroup,
    j: &Subgroup,
    want_pairs: usize,
    cfg: &SampleCfg,
) -> Result<Outcome> {
    let group = action.group().clone();
    let base = RepSystem::canonical(j, i)?;
    let mut systems = vec![base.clone()];
    let mut s = Sampler::new(cfg.seed);
    // separate stream for system generation so morphism samples stay put
    let mut rng: rand_chacha::ChaCha8Rng = rand::SeedableRng::seed_from_u64(cfg.seed ^ 0x9e37_79b9);
    for _ in 0..want_pairs * 4 {
        if systems.len() > want_pairs {
            break;
        }
        let reps: Vec<Elem> = base
            .reps()
            .iter()
            .map(|&a| {
                let members = i.members();
                group.mul(a, members[rng.random_range(0..members.len())])
            })
            .collect();
        let candidate = RepSystem::with_reps(j, i, reps)?;
        if !systems.contains(&candidate) {
            systems.push(candidate);
        }
    }
    let ctx_i = TwistedCtx::new(action.clone(), i.clone())?;
    let ctx_j = TwistedCtx::new(action.clone(), j.clone())?;
    let mut checked = 0;
    for a in 0..systems.len() {
        for b in (a + 1)..systems.len().min(a + 1 + want_pairs) {
            let (rs1, rs2) = (&systems[a], &systems[b]);
            if k0_multiplier(&FunctorDescriptor::Res { index: rs1.index() })
                != k0_multiplier(&FunctorDescriptor::Res { index: rs2.index() })
            {
                return Ok(fail("rank multipliers differ between systems"));
            }
            for _ in 0..cfg.samples {
                let (dom, cod) = (s.rank(cfg.max_rank), s.rank(cfg.max_rank));
                let phi = s.morphism(&ctx_j, dom, cod);
                let (xi_a, xi_a_inv) = xi_witness(action, rs1, rs2, dom)?;
                let (xi_b, _) = xi_witness(action, rs1, rs2, cod)?;
                if !verify_inverse_pair(&ctx_i, &xi_a, &xi_a_inv)? {
                    return Ok(fail("ξ witness is not invertible"));
                }
                let top = res_apply(action, rs1, &phi)?;
                let bottom = res_apply(action, rs2, &phi)?;
                if !square_commutes(&ctx_i, &top, &xi_b, &xi_a, &bottom)? {
                    return Ok(fail("ξ naturality square fails"));
                }
                checked += 1;
            }
        }
    }
    Ok(Outcome::Pass { samples: checked })
}

/// The regular-representation identity: Ind_1^F ∘ Res_1^F and the pairing
/// with the regular lattice have the same rank multiplier |F| and are
/// naturally isomorphic through the explicit witness.
pub fn regular_identity(action: &RingAction, cfg: &SampleCfg) -> Result<Outcome> {
    let group = action.group().clone();
    let full = group.full_subgroup();
    let triv = group.trivial_subgroup();
    let rs = RepSystem::canonical(&full, &triv)?;
    let reg = Lattice::regular(full.clone());
    let id_reg = LatMor::identity(&reg);
    let ctx = TwistedCtx::full(action.clone());
    let order = BigInt::from(group.order() as u64);
    if k0_multiplier(&FunctorDescriptor::Theta { rank: reg.rank() }) != order
        || k0_multiplier(&FunctorDescriptor::Composite(vec![
            FunctorDescriptor::Res { index: rs.index() },
            FunctorDescriptor::Ind,
        ])) != order
    {
        return Ok(fail("rank multiplier is not |F|"));
    }
    let mut s = Sampler::new(cfg.seed);
    let mut samples = 0;
    for _ in 0..cfg.samples {
        let dom = s.rank(3);
        let cod = s.rank(3);
        let phi = s.morphism(&ctx, dom, cod);
        let theta_phi = theta_apply(action, &id_reg, &phi)?;
        let ind_res_phi = ind_apply(&triv, &full, &res_apply(action, &rs, &phi)?)?;
        let (omega_a, omega_a_inv) = induction_theta_witness(action, &rs, 1, dom)?;
        let (omega_b, _) = induction_theta_witness(action, &rs, 1, cod)?;
        if !verify_inverse_pair(&ctx, &omega_a, &omega_a_inv)? {
            return Ok(fail("regular-identity witness not invertible"));
        }
        if !square_commutes(&ctx, &theta_phi, &omega_b, &omega_a, &ind_res_phi)? {
            return Ok(fail("regular-identity naturality fails"));
        }
        samples += 1;
    }
    Ok(Outcome::Pass { samples })
}

fn nested_pairs(g: &Group) -> Vec<(Subgroup, Subgroup)> {
    let mut out = Vec::new();
    for j in g.subgroups() {
        for i in g.subgroups() {
            if i.is_subgroup_of(j) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}

fn sub_name(g: &Group, h: &Subgroup) -> String {
    format!("#{}(|{}|)", g.subgroup_id(h).unwrap(), h.order())
}

fn admitted(filter: Option<&[usize]>, g: &Group, h: &Subgroup) -> bool {
    match filter {
        None => true,
        Some(ids) => ids.contains(&g.subgroup_id(h).unwrap()),
    }
}

/// Runs one axiom over every admissible subgroup tuple of the group,
/// optionally restricted to the listed subgroup ids.
pub fn run_axiom(
    action: &RingAction,
    axiom: u8,
    cfg: &SampleCfg,
    filter: Option<&[usize]>,
) -> Result<Vec<CheckRecord>> {
    let g = action.group().clone();
    let mut out = Vec::new();
    let mut push = |name: String, outcome: Outcome| {
        out.push(CheckRecord { name, outcome });
    };
    match axiom {
        1 => {
            for i in g.subgroups() {
                if !admitted(filter, &g, i) {
                    continue;
                }
                let o = axiom1_identity(action, i, cfg)?;
                push(format!("axiom1[I={}]", sub_name(&g, i)), o);
            }
        }
        2 | 3 => {
            for k in g.subgroups().iter().filter(|k| admitted(filter, &g, k)) {
                for j in g.subgroups().iter().filter(|j| j.is_subgroup_of(k) && admitted(filter, &g, j)) {
                    for i in g.subgroups().iter().filter(|i| i.is_subgroup_of(j) && admitted(filter, &g, i)) {
                        let o = if axiom == 2 {
                            axiom2_res_transitive(action, i, j, k, cfg)?
                        } else {
                            axiom3_ind_transitive(action, i, j, k, cfg)?
                        };
                        push(
                            format!(
                                "axiom{axiom}[I={},J={},K={}]",
                                sub_name(&g, i),
                                sub_name(&g, j),
                                sub_name(&g, k)
                            ),
                            o,
                        );
                    }
                }
            }
        }
        4 => {
            for i in g.subgroups().iter().filter(|i| admitted(filter, &g, i)) {
                let mut worst = Outcome::Pass { samples: 0 };
                let mut total = 0;
                'outer: for f in g.elements() {
                    for h in g.elements() {
                        let o = axiom4_conj_composes(action, i, f, h, cfg)?;
                        match o {
                            Outcome::Pass { samples } => total += samples,
                            other => {
                                worst = other;
                                break 'outer;
                            }
                        }
                    }
                }
                if worst.is_pass() {
                    worst = Outcome::Pass { samples: total };
                }
                push(format!("axiom4[I={}]", sub_name(&g, i)), worst);
            }
        }
        5 | 6 => {
            for (i, j) in nested_pairs(&g) {
                if !admitted(filter, &g, &i) || !admitted(filter, &g, &j) {
                    continue;
                }
                let mut worst = Outcome::Pass { samples: 0 };
                let mut total = 0;
                for f in g.elements() {
                    let o = if axiom == 5 {
                        axiom5_res_conj(action, &i, &j, f, cfg)?
                    } else {
                        axiom6_ind_conj(action, &i, &j, f, cfg)?
                    };
                    match o {
                        Outcome::Pass { samples } => total += samples,
                        other => {
                            worst = other;
                            break;
                        }
                    }
                }
                if worst.is_pass() {
                    worst = Outcome::Pass { samples: total };
                }
                push(
                    format!("axiom{axiom}[I={},J={}]", sub_name(&g, &i), sub_name(&g, &j)),
                    worst,
                );
            }
        }
        7 => {
            for k in g.subgroups().iter().filter(|k| admitted(filter, &g, k)) {
                for j in g.subgroups().iter().filter(|j| j.is_subgroup_of(k) && admitted(filter, &g, j)) {
                    for i in g.subgroups().iter().filter(|i| i.is_subgroup_of(k) && admitted(filter, &g, i)) {
                        let o = axiom7_double_coset(action, k, j, i, cfg)?;
                        push(
                            format!(
                                "axiom7[K={},J={},I={}]",
                                sub_name(&g, k),
                                sub_name(&g, j),
                                sub_name(&g, i)
                            ),
                            o,
                        );
                    }
                }
            }
        }
        other => {
            return Err(crate::error::Error::InputError(format!(
                "axiom index {other} out of range 1..7"
            )))
        }
    }
    Ok(out)
}

/// All seven axioms over all admissible tuples.
pub fn run_axiom_suite(
    action: &RingAction,
    cfg: &SampleCfg,
    filter: Option<&[usize]>,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for axiom in 1..=7 {
        out.extend(run_axiom(action, axiom, cfg, filter)?);
    }
    Ok(out)
}

/// Both Frobenius laws over all nested pairs.
pub fn run_frobenius_suite(
    action: &RingAction,
    cfg: &SampleCfg,
    filter: Option<&[usize]>,
) -> Result<Vec<CheckRecord>> {
    let g = action.group().clone();
    let mut out = Vec::new();
    for (i, j) in nested_pairs(&g) {
        if !admitted(filter, &g, &i) || !admitted(filter, &g, &j) {
            continue;
        }
        out.push(CheckRecord {
            name: format!(
                "frobenius1[I={},J={}]",
                sub_name(&g, &i),
                sub_name(&g, &j)
            ),
            outcome: frobenius_law1(action, &i, &j, cfg)?,
        });
        out.push(CheckRecord {
            name: format!(
                "frobenius2[I={},J={}]",
                sub_name(&g, &i),
                sub_name(&g, &j)
            ),
            outcome: frobenius_law2(action, &i, &j, cfg)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zalgebra::ZAlgebra;

    fn action_for(group: &str, ring: &str) -> RingAction {
        let g = Group::builtin(group).unwrap();
        let r = ZAlgebra::builtin(ring).unwrap();
        RingAction::builtin(g, r).unwrap()
    }

    fn assert_all_pass(records: &[CheckRecord]) {
        for r in records {
            assert!(r.outcome.is_pass(), "{}: {:?}", r.name, r.outcome);
        }
    }

    #[test]
    fn axiom4_on_s3_samples() {
        let action = action_for("S3", "Z[i]");
        let cfg = SampleCfg::default();
        let records = run_axiom(&action, 4, &cfg, None).unwrap();
        assert_all_pass(&records);
    }

    #[test]
    fn axiom2_with_compatible_reps_on_s3_chain() {
        let action = action_for("S3", "Z[i]");
        let g = action.group().clone();
        let triv = g.trivial_subgroup();
        let c3 = g.subgroups().iter().find(|h| h.order() == 3).unwrap().clone();
        let full = g.full_subgroup();
        let o = axiom2_res_transitive(&action, &triv, &c3, &full, &SampleCfg::default()).unwrap();
        assert!(o.is_pass(), "{o:?}");
    }

    #[test]
    fn axiom7_on_a4_v4_c3() {
        let action = action_for("A4", "Z[i]");
        let g = action.group().clone();
        let v4 = g.subgroups().iter().find(|h| h.order() == 4).unwrap().clone();
        let c3 = g.subgroups().iter().find(|h| h.order() == 3).unwrap().clone();
        let full = g.full_subgroup();
        // single double coset V4\A4/C3
        assert_eq!(full.double_coset_reps(&v4, &c3).unwrap().len(), 1);
        let o = axiom7_double_coset(&action, &full, &v4, &c3, &SampleCfg::default()).unwrap();
        assert!(o.is_pass(), "{o:?}");
    }

    #[test]
    fn frobenius_laws_reduce_to_theta_when_equal() {
        let action = action_for("S3", "Z[i]");
        let g = action.group().clone();
        let full = g.full_subgroup();
        let cfg = SampleCfg::default();
        assert!(frobenius_law1(&action, &full, &full, &cfg).unwrap().is_pass());
        assert!(frobenius_law2(&action, &full, &full, &cfg).unwrap().is_pass());
    }

    #[test]
    fn frobenius_law1_c2_in_s3() {
        let action = action_for("S3", "Z[i]");
        let g = action.group().clone();
        let c2 = g.subgroups().iter().find(|h| h.order() == 2).unwrap().clone();
        let full = g.full_subgroup();
        let o = frobenius_law1(&action, &c2, &full, &SampleCfg::default()).unwrap();
        assert!(o.is_pass(), "{o:?}");
    }

    #[test]
    fn frobenius_law2_trivial_in_c2() {
        let action = action_for("C2", "Z[i]");
        let g = action.group().clone();
        let triv = g.trivial_subgroup();
        let full = g.full_subgroup();
        let o = frobenius_law2(&action, &triv, &full, &SampleCfg::default()).unwrap();
        assert!(o.is_pass(), "{o:?}");
    }

    #[test]
    fn regular_identity_c3() {
        let action = action_for("C3", "Z[C3]");
        let o = regular_identity(&action, &SampleCfg::default()).unwrap();
        assert!(o.is_pass(), "{o:?}");
    }

    #[test]
    fn choice_independence_c3_in_s3() {
        let action = action_for("S3", "Z[i]");
        let g = action.group().clone();
        let c3 = g.subgroups().iter().find(|h| h.order() == 3).unwrap().clone();
        let full = g.full_subgroup();
        let cfg = SampleCfg {
            samples: 10,
            ..Default::default()
        };
        let o = choice_independence(&action, &c3, &full, 3, &cfg).unwrap();
        assert!(o.is_pass(), "{o:?}");
    }
}
