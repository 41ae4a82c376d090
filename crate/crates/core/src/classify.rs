//! Classification of subgroups into the cyclic / p-elementary /
//! p-hyperelementary hierarchy, and the subgroup families built from it.
//!
//! A group is p-hyperelementary when it is C ⋊ P with C normal cyclic of
//! order prime to p and P a p-group, and p-elementary when the product is
//! direct. Everything here is decided by definitional search over the
//! subgroup lattice: no structure theory is assumed.

use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};
use std::collections::{BTreeMap, BTreeSet};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Witness for a p-hyperelementary decomposition H = C ⋊ P.
#[derive(Clone, Debug)]
pub struct DecompositionWitness {
    pub cyclic_normal: Subgroup,
    /// Present exactly when the decomposition is direct (p-elementary).
    pub p_part: Option<Subgroup>,
}

/// Result of classifying one subgroup.
///
/// The prime sets range over the primes dividing the parent group order;
/// for any other prime p, the subgroup is p-(hyper)elementary exactly when
/// it is cyclic (`is_cyclic` covers that case).
#[derive(Clone, Debug)]
pub struct SubgroupClassification {
    pub is_cyclic: bool,
    pub p_group_prime: Option<u64>,
    pub elementary_primes: BTreeSet<u64>,
    pub hyperelementary_primes: BTreeSet<u64>,
    pub witnesses: BTreeMap<u64, DecompositionWitness>,
}

/// Classifies `H ≤ G` by searching its normal cyclic subgroups.
pub fn classify_subgroup(g: &Group, h: &Subgroup) -> Result<SubgroupClassification> {
    if h.group() != g {
        return Err(Error::NotASubgroup {
            reason: "subgroup belongs to a different group".into(),
        });
    }
    let order = h.order() as u64;
    let is_cyclic = h.is_cyclic();
    let p_group_prime = prime_divisors(order)
        .into_iter()
        .find(|&p| is_power_of(order, p));

    // subgroups of H = subgroups of G contained in H
    let subs_of_h: Vec<&Subgroup> = g
        .subgroups()
        .iter()
        .filter(|k| k.is_subgroup_of(h))
        .collect();

    let mut elementary_primes = BTreeSet::new();
    let mut hyperelementary_primes = BTreeSet::new();
    let mut witnesses: BTreeMap<u64, DecompositionWitness> = BTreeMap::new();

    for p in prime_divisors(g.order() as u64)
        .into_iter()
        .chain(prime_divisors(order))
        .collect::<BTreeSet<_>>()
    {
        for c in &subs_of_h {
            let c_order = c.order() as u64;
            if c_order % p == 0 || !c.is_cyclic() || !c.is_normal_in(h) {
                continue;
            }
            let index = order / c_order;
            if !is_power_of(index, p) {
                continue;
            }
            hyperelementary_primes.insert(p);
            // direct decomposition: a normal p-subgroup P with C ∩ P = 1
            // and |C||P| = |H|
            let p_part = subs_of_h
                .iter()
                .find(|q| {
                    q.order() as u64 == index
                        && is_power_of(q.order() as u64, p)
                        && q.is_normal_in(h)
                        && c.intersect(q).order() == 1
                })
                .map(|q| (*q).clone());
            if p_part.is_some() {
                elementary_primes.insert(p);
            }
            let replace = match witnesses.get(&p) {
                None => true,
                Some(w) => w.p_part.is_none() && p_part.is_some(),
            };
            if replace {
                witnesses.insert(
                    p,
                    DecompositionWitness {
                        cyclic_normal: (*c).clone(),
                        p_part,
                    },
                );
            }
            if elementary_primes.contains(&p) {
                break;
            }
        }
    }

    Ok(SubgroupClassification {
        is_cyclic,
        p_group_prime,
        elementary_primes,
        hyperelementary_primes,
        witnesses,
    })
}

/// The subgroup-class family tags of the induction machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    Hyperelementary,
    HyperelementaryP(u64),
    Elementary,
    ElementaryP(u64),
    FiniteCyclic,
    Custom(String),
}

impl FamilyTag {
    /// CLI spelling: `H`, `Hp:<p>`, `E`, `Ep:<p>`, `FC`.
    pub fn parse(s: &str) -> Result<FamilyTag> {
        match s {
            "H" => return Ok(FamilyTag::Hyperelementary),
            "E" => return Ok(FamilyTag::Elementary),
            "FC" => return Ok(FamilyTag::FiniteCyclic),
            _ => {}
        }
        for (prefix, make) in [
            ("Hp:", FamilyTag::HyperelementaryP as fn(u64) -> FamilyTag),
            ("Ep:", FamilyTag::ElementaryP as fn(u64) -> FamilyTag),
        ] {
            if let Some(p) = s.strip_prefix(prefix) {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::InputError(format!("bad prime in family tag {s:?}")))?;
                if !is_prime(p) {
                    return Err(Error::InputError(format!("{p} is not prime")));
                }
                return Ok(make(p));
            }
        }
        Err(Error::InputError(format!("unknown family tag {s:?}")))
    }

    pub fn label(&self) -> String {
        match self {
            FamilyTag::Hyperelementary => "H".into(),
            FamilyTag::HyperelementaryP(p) => format!("Hp:{p}"),
            FamilyTag::Elementary => "E".into(),
            FamilyTag::ElementaryP(p) => format!("Ep:{p}"),
            FamilyTag::FiniteCyclic => "FC".into(),
            FamilyTag::Custom(name) => format!("custom:{name}"),
        }
    }
}

/// A family of subgroups closed under subgroups and conjugation.
#[derive(Clone, Debug)]
pub struct Family {
    pub tag: FamilyTag,
    pub members: Vec<Subgroup>,
}

impl Family {
    /// Validates the closure invariants (used for custom families; the
    /// classification families satisfy them by construction).
    pub fn validate_closed(&self, g: &Group) -> Result<()> {
        let ids: BTreeSet<Vec<Elem>> = self
            .members
            .iter()
            .map(|h| h.members().to_vec())
            .collect();
        for h in &self.members {
            for k in g.subgroups() {
                if k.is_subgroup_of(h) && !ids.contains(k.members()) {
                    return Err(Error::FamilyNotClosed(format!(
                        "missing subgroup of order {} inside a member of order {}",
                        k.order(),
                        h.order()
                    )));
                }
            }
            for f in g.elements() {
                if !ids.contains(h.conjugate(f).members()) {
                    return Err(Error::FamilyNotClosed(format!(
                        "missing conjugate of a member of order {}",
                        h.order()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.iter().any(|m| m == h)
    }
}

fn classification_accepts(tag: &FamilyTag, c: &SubgroupClassification) -> bool {
    match tag {
        FamilyTag::Hyperelementary => c.is_cyclic || !c.hyperelementary_primes.is_empty(),
        FamilyTag::HyperelementaryP(p) => c.hyperelementary_primes.contains(p),
        FamilyTag::Elementary => c.is_cyclic || !c.elementary_primes.is_empty(),
        FamilyTag::ElementaryP(p) => c.elementary_primes.contains(p),
        FamilyTag::FiniteCyclic => c.is_cyclic,
        FamilyTag::Custom(_) => false,
    }
}

/// All subgroups of `g` passing the classification predicate for `tag`.
pub fn subgroup_family(g: &Group, tag: FamilyTag) -> Result<Family> {
    let mut members = Vec::new();
    for h in g.subgroups() {
        let c = classify_subgroup(g, h)?;
        // for primes p not dividing |G| the prime sets are silent and
        // p-(hyper)elementary collapses to cyclic
        let accepted = match &tag {
            FamilyTag::HyperelementaryP(p) if g.order() as u64 % p != 0 => c.is_cyclic,
            FamilyTag::ElementaryP(p) if g.order() as u64 % p != 0 => c.is_cyclic,
            t => classification_accepts(t, &c),
        };
        if accepted {
            members.push(h.clone());
        }
    }
    Ok(Family { tag, members })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_helpers() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(12));
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn trivial_subgroup_is_everything() {
        let s3 = Group::builtin("S3").unwrap();
        let c = classify_subgroup(&s3, &s3.trivial_subgroup()).unwrap();
        assert!(c.is_cyclic);
        // degenerate decomposition C = P = 1 for each prime dividing |G|
        assert_eq!(c.elementary_primes, BTreeSet::from([2, 3]));
        assert_eq!(c.hyperelementary_primes, BTreeSet::from([2, 3]));
    }

    #[test]
    fn c6_is_2_and_3_hyperelementary() {
        let c6 = Group::builtin("C6").unwrap();
        let c = classify_subgroup(&c6, &c6.full_subgroup()).unwrap();
        assert!(c.is_cyclic);
        assert!(c.hyperelementary_primes.contains(&2));
        assert!(c.hyperelementary_primes.contains(&3));
        // C6 = C3 x C2 = C2 x C3: elementary for both primes
        assert!(c.elementary_primes.contains(&2));
        assert!(c.elementary_primes.contains(&3));
    }

    #[test]
    fn a4_is_not_hyperelementary() {
        let a4 = Group::builtin("A4").unwrap();
        let c = classify_subgroup(&a4, &a4.full_subgroup()).unwrap();
        assert!(c.hyperelementary_primes.is_empty());
        assert!(!c.is_cyclic);
        // every proper subgroup is hyperelementary for some prime
        for h in a4.subgroups() {
            if h.order() == a4.order() {
                continue;
            }
            let c = classify_subgroup(&a4, h).unwrap();
            assert!(
                c.is_cyclic || !c.hyperelementary_primes.is_empty(),
                "proper subgroup of order {} should be hyperelementary",
                h.order()
            );
        }
    }

    #[test]
    fn s3_is_2_hyperelementary_not_2_elementary() {
        let s3 = Group::builtin("S3").unwrap();
        let c = classify_subgroup(&s3, &s3.full_subgroup()).unwrap();
        assert!(c.hyperelementary_primes.contains(&2)); // C3 ⋊ C2
        assert!(!c.elementary_primes.contains(&2)); // not a direct product
        assert!(!c.hyperelementary_primes.contains(&3)); // C2 not normal
        let w = &c.witnesses[&2];
        assert_eq!(w.cyclic_normal.order(), 3);
        assert!(w.p_part.is_none());
    }

    #[test]
    fn family_h_of_s3_is_everything() {
        let s3 = Group::builtin("S3").unwrap();
        let fam = subgroup_family(&s3, FamilyTag::Hyperelementary).unwrap();
        assert_eq!(fam.members.len(), 6);
        fam.validate_closed(&s3).unwrap();
    }

    #[test]
    fn family_h_of_a4_excludes_a4() {
        let a4 = Group::builtin("A4").unwrap();
        let fam = subgroup_family(&a4, FamilyTag::Hyperelementary).unwrap();
        assert_eq!(fam.members.len(), 9);
        assert!(!fam.contains(&a4.full_subgroup()));
        fam.validate_closed(&a4).unwrap();
    }

    #[test]
    fn fc_family_of_trivial_group() {
        let t = Group::trivial();
        let fam = subgroup_family(&t, FamilyTag::FiniteCyclic).unwrap();
        assert_eq!(fam.members.len(), 1);
    }

    #[test]
    fn families_are_closed_for_test_groups() {
        for name in ["S3", "D4", "A4"] {
            let g = Group::builtin(name).unwrap();
            for tag in [
                FamilyTag::Hyperelementary,
                FamilyTag::HyperelementaryP(2),
                FamilyTag::HyperelementaryP(3),
                FamilyTag::Elementary,
                FamilyTag::ElementaryP(2),
                FamilyTag::FiniteCyclic,
            ] {
                let fam = subgroup_family(&g, tag.clone()).unwrap();
                fam.validate_closed(&g)
                    .unwrap_or_else(|e| panic!("{name} {}: {e}", tag.label()));
            }
        }
    }

    #[test]
    fn family_tag_parsing() {
        assert_eq!(FamilyTag::parse("H").unwrap(), FamilyTag::Hyperelementary);
        assert_eq!(
            FamilyTag::parse("Hp:2").unwrap(),
            FamilyTag::HyperelementaryP(2)
        );
        assert_eq!(FamilyTag::parse("Ep:3").unwrap(), FamilyTag::ElementaryP(3));
        assert_eq!(FamilyTag::parse("FC").unwrap(), FamilyTag::FiniteCyclic);
        assert!(FamilyTag::parse("Hp:6").is_err());
        assert!(FamilyTag::parse("X").is_err());
    }
}
