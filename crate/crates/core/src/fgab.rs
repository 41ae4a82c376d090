//! Finitely generated abelian groups as integer presentations, maps between
//! them, and localization of coefficients.
//!
//! A group is `Z^gens / im(rels)` where relation vectors are the columns of
//! `rels`. Maps are integer matrices on generators; two maps are equal when
//! the difference lands in the target relation lattice, never by raw matrix
//! comparison. Localized groups keep an integer presentation plus a mode
//! marker; membership and equality tests then allow denominators that are
//! units for the mode.

use crate::error::{Error, Result};
use crate::intmat::{IntMat, Snf};
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Coefficient ring for values: Z, Z_(p), Q, or Z[1/2].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoefficientMode {
    Integral,
    PLocal(u64),
    Rational,
    InvertTwo,
}

impl CoefficientMode {
    /// Parses the CLI spelling: `Z`, `Zp:<p>`, `Q`, `Z-half`.
    pub fn parse(s: &str) -> Result<Self> {
        if s == "Z" {
            return Ok(CoefficientMode::Integral);
        }
        if s == "Q" {
            return Ok(CoefficientMode::Rational);
        }
        if s == "Z-half" {
            return Ok(CoefficientMode::InvertTwo);
        }
        if let Some(p) = s.strip_prefix("Zp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InputError(format!("bad prime in coefficient mode {s:?}")))?;
            if p < 2 || !crate::classify::is_prime(p) {
                return Err(Error::InputError(format!("{p} is not prime")));
            }
            return Ok(CoefficientMode::PLocal(p));
        }
        Err(Error::InputError(format!("unknown coefficient mode {s:?}")))
    }

    /// Image of an invariant factor under the localization.
    pub fn filter_factor(&self, d: &BigInt) -> BigInt {
        if d.is_zero() {
            return BigInt::zero();
        }
        match self {
            CoefficientMode::Integral => d.abs(),
            CoefficientMode::Rational => BigInt::one(),
            CoefficientMode::PLocal(p) => {
                let p = BigInt::from(*p);
                let mut rest = d.abs();
                let mut part = BigInt::one();
                while rest.mod_floor(&p).is_zero() {
                    rest /= &p;
                    part *= &p;
                }
                part
            }
            CoefficientMode::InvertTwo => {
                let two = BigInt::from(2);
                let mut rest = d.abs();
                while rest.mod_floor(&two).is_zero() {
                    rest /= &two;
                }
                rest
            }
        }
    }

    /// Whether a minimal denominator `s > 0` is a unit for this mode.
    pub fn allows_denominator(&self, s: &BigInt) -> bool {
        match self {
            CoefficientMode::Integral => s.is_one(),
            CoefficientMode::Rational => true,
            CoefficientMode::PLocal(p) => !s.mod_floor(&BigInt::from(*p)).is_zero(),
            CoefficientMode::InvertTwo => self.filter_factor(s).is_one(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            CoefficientMode::Integral => "Z".into(),
            CoefficientMode::PLocal(p) => format!("Zp:{p}"),
            CoefficientMode::Rational => "Q".into(),
            CoefficientMode::InvertTwo => "Z-half".into(),
        }
    }
}

/// `Z^gens / im(rels)` with a coefficient-mode marker.
#[derive(Clone, Debug)]
pub struct FgAbelianGroup {
    gens: usize,
    rels: IntMat,
    mode: CoefficientMode,
    snf: OnceLock<Snf>,
}

impl PartialEq for FgAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.rels == other.rels && self.mode == other.mode
    }
}
impl Eq for FgAbelianGroup {}

impl FgAbelianGroup {
    pub fn new(gens: usize, rels: IntMat) -> Self {
        assert_eq!(rels.rows(), gens, "relation vectors live in Z^gens");
        FgAbelianGroup {
            gens,
            rels,
            mode: CoefficientMode::Integral,
            snf: OnceLock::new(),
        }
    }

    pub fn with_mode(gens: usize, rels: IntMat, mode: CoefficientMode) -> Self {
        assert_eq!(rels.rows(), gens);
        FgAbelianGroup {
            gens,
            rels,
            mode,
            snf: OnceLock::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup::new(rank, IntMat::zeros(rank, 0))
    }

    pub fn zero() -> Self {
        FgAbelianGroup::free(0)
    }

    /// Z/n on one generator.
    pub fn cyclic(n: u64) -> Self {
        FgAbelianGroup::new(1, IntMat::from_fn(1, 1, |_, _| BigInt::from(n)))
    }

    /// Z^free ⊕ (⊕ Z/d_i) on free + torsion generators.
    pub fn from_factors(free: usize, torsion: &[u64]) -> Self {
        let gens = free + torsion.len();
        let rels = IntMat::from_fn(gens, torsion.len(), |r, c| {
            if r == free + c {
                BigInt::from(torsion[c])
            } else {
                BigInt::zero()
            }
        });
        FgAbelianGroup::new(gens, rels)
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn rels(&self) -> &IntMat {
        &self.rels
    }

    pub fn mode(&self) -> CoefficientMode {
        self.mode
    }

    fn snf(&self) -> &Snf {
        self.snf.get_or_init(|| self.rels.snf())
    }

    pub fn free_rank(&self) -> usize {
        self.gens - self.snf().rank()
    }

    /// Mode-filtered invariant factors > 1, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.snf()
            .diagonal()
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| self.mode.filter_factor(d))
            .filter(|d| !d.is_one())
            .collect()
    }

    /// True when the group vanishes over its coefficient mode.
    pub fn is_zero(&self) -> bool {
        self.free_rank() == 0 && self.invariant_factors().is_empty()
    }

    /// Mode-aware membership of `v` in the relation lattice: some mode-unit
    /// multiple of `v` is an integral combination of relations.
    pub fn in_relation_lattice(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.gens);
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        match self.snf().minimal_denominator(v) {
            None => false,
            Some((s, _)) => self.mode.allows_denominator(&s),
        }
    }

    /// Canonical localized presentation plus the unimodular change of
    /// coordinates `u` (new = u * old) and its inverse.
    pub fn localize(&self, mode: CoefficientMode) -> (FgAbelianGroup, IntMat, IntMat) {
        let s = self.snf();
        let diag = s.diagonal();
        let filtered: Vec<BigInt> = diag
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| mode.filter_factor(d))
            .collect();
        let rels = IntMat::from_fn(self.gens, filtered.len(), |r, c| {
            if r == c {
                filtered[c].clone()
            } else {
                BigInt::zero()
            }
        });
        (
            FgAbelianGroup::with_mode(self.gens, rels, mode),
            s.u.clone(),
            s.u_inv.clone(),
        )
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank() > 0 {
            if self.free_rank() == 1 {
                parts.push("Z".into());
            } else {
                parts.push(format!("Z^{}", self.free_rank()));
            }
        }
        for d in self.invariant_factors() {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let body = parts.join(" + ");
        match self.mode {
            CoefficientMode::Integral => body,
            m => format!("{body} ({})", m.label()),
        }
    }
}

/// A homomorphism between presented groups, as a matrix on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    pub source: FgAbelianGroup,
    pub target: FgAbelianGroup,
    pub matrix: IntMat,
}

impl AbHom {
    /// Builds the map and checks well-definedness: every source relation must
    /// land in the target relation lattice.
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntMat) -> Result<AbHom> {
        if matrix.rows() != target.gens() || matrix.cols() != source.gens() {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", target.gens(), source.gens()),
                got: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        let hom = AbHom {
            source,
            target,
            matrix,
        };
        for c in 0..hom.source.rels().cols() {
            let rel = hom.source.rels().col_vec(c);
            let image = hom.matrix.mul_vec(&rel);
            if !hom.target.in_relation_lattice(&image) {
                return Err(Error::InputError(format!(
                    "map does not respect source relation {c}"
                )));
            }
        }
        Ok(hom)
    }

    pub fn identity(g: &FgAbelianGroup) -> AbHom {
        AbHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMat::identity(g.gens()),
        }
    }

    pub fn zero(source: &FgAbelianGroup, target: &FgAbelianGroup) -> AbHom {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMat::zeros(target.gens(), source.gens()),
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AbHom) -> AbHom {
        assert_eq!(
            self.source, other.target,
            "composition endpoints must agree"
        );
        AbHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn add(&self, other: &AbHom) -> AbHom {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        AbHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
        }
    }

    /// Equality as maps: the difference sends every generator into the
    /// target relation lattice.
    pub fn equals(&self, other: &AbHom) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let diff = self.matrix.sub(&other.matrix);
        (0..diff.cols()).all(|c| self.target.in_relation_lattice(&diff.col_vec(c)))
    }

    /// Image of a generator-coordinate vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// Cokernel presentation: target generators modulo image and target
    /// relations.
    pub fn cokernel(&self) -> FgAbelianGroup {
        FgAbelianGroup::with_mode(
            self.target.gens(),
            self.matrix.hstack(self.target.rels()),
            self.target.mode(),
        )
    }

    /// Kernel presentation plus the inclusion of its generators into source
    /// coordinates.
    pub fn kernel(&self) -> (FgAbelianGroup, IntMat) {
        // lattice L = { x : M x ∈ im(target rels) }, via ker [M | R_B]
        let aug = self.matrix.hstack(self.target.rels());
        let ker = aug.snf().kernel_basis();
        let p = IntMat::from_fn(self.source.gens(), ker.cols(), |r, c| ker.get(r, c).clone());
        // relations among the columns of p, modulo im(source rels)
        let aug2 = p.hstack(self.source.rels());
        let ker2 = aug2.snf().kernel_basis();
        let rels = IntMat::from_fn(p.cols(), ker2.cols(), |r, c| ker2.get(r, c).clone());
        (
            FgAbelianGroup::with_mode(p.cols(), rels, self.source.mode()),
            p,
        )
    }

    /// Both kernel and cokernel vanish over the coefficient mode.
    pub fn is_isomorphism(&self) -> bool {
        self.cokernel().is_zero() && self.kernel().0.is_zero()
    }

    /// Transports the map through localization of both endpoints.
    pub fn localize(&self, mode: CoefficientMode) -> AbHom {
        let (src, _, src_u_inv) = self.source.localize(mode);
        let (tgt, tgt_u, _) = self.target.localize(mode);
        AbHom {
            source: src,
            target: tgt,
            matrix: tgt_u.mul(&self.matrix).mul(&src_u_inv),
        }
    }
}
