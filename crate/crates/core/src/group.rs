//! Exact finite-group engine: elements, subgroups, cosets and double cosets.
//!
//! Groups are permutation groups on `0..degree`, closed at construction time
//! and capped at [`DEFAULT_ORDER_CAP`] elements. Elements are kept in the
//! canonical lexicographic order of their image sequences, and every
//! representative choice (cosets, double cosets, conjugacy classes) takes the
//! minimal element in that order, so all derived data is deterministic.

use crate::error::{Error, Result};
use crate::perm::Perm;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

pub const DEFAULT_ORDER_CAP: usize = 200;

/// Element index into the canonical element list of a [`Group`].
pub type Elem = usize;

#[derive(Debug)]
struct GroupInner {
    degree: usize,
    elements: Vec<Perm>,
    generators: Vec<Elem>,
    identity: Elem,
    mult: Vec<Elem>,
    inv: Vec<Elem>,
    subgroups: OnceLock<Vec<Subgroup>>,
    conjugacy_classes: OnceLock<Vec<Vec<Elem>>>,
}

/// A finite permutation group. Cheap to clone; all data is immutable.
#[derive(Clone, Debug)]
pub struct Group {
    inner: Arc<GroupInner>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.degree == other.inner.degree
                && self.inner.elements == other.inner.elements)
    }
}
impl Eq for Group {}

impl Group {
    /// Closes the generating set; fails if the closure exceeds `cap`.
    pub fn generate_with_cap(degree: usize, gens: &[Perm], cap: usize) -> Result<Group> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation {
                    degree,
                    images: g.images().to_vec(),
                });
            }
        }
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        set.insert(Perm::identity(degree));
        let mut queue: Vec<Perm> = gens.to_vec();
        while let Some(p) = queue.pop() {
            if set.contains(&p) {
                continue;
            }
            set.insert(p.clone());
            if set.len() > cap {
                return Err(Error::OrderCapExceeded { cap });
            }
            let snapshot: Vec<Perm> = set.iter().cloned().collect();
            for q in &snapshot {
                queue.push(p.compose(q));
                queue.push(q.compose(&p));
            }
            queue.push(p.inverse());
        }
        let elements: Vec<Perm> = set.into_iter().collect();
        let n = elements.len();
        let index_of: BTreeMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mult = vec![0usize; n * n];
        for (i, p) in elements.iter().enumerate() {
            for (j, q) in elements.iter().enumerate() {
                mult[i * n + j] = index_of[&p.compose(q)];
            }
        }
        let inv: Vec<usize> = elements.iter().map(|p| index_of[&p.inverse()]).collect();
        let identity = index_of[&Perm::identity(degree)];
        let generators = gens.iter().map(|g| index_of[g]).collect();
        Ok(Group {
            inner: Arc::new(GroupInner {
                degree,
                elements,
                generators,
                identity,
                mult,
                inv,
                subgroups: OnceLock::new(),
                conjugacy_classes: OnceLock::new(),
            }),
        })
    }

    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Group> {
        Group::generate_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn trivial() -> Group {
        Group::generate(1, &[]).expect("trivial group")
    }

    /// Named builtin groups: S3, D4, A4, Q8, C6, S4.
    pub fn builtin(name: &str) -> Result<Group> {
        let (degree, cycles): (usize, Vec<Vec<Vec<usize>>>) = match name {
            "1" | "triv" => (1, vec![]),
            "C2" => (2, vec![vec![vec![0, 1]]]),
            "C3" => (3, vec![vec![vec![0, 1, 2]]]),
            "C4" => (4, vec![vec![vec![0, 1, 2, 3]]]),
            "C6" => (6, vec![vec![vec![0, 1, 2, 3, 4, 5]]]),
            "S3" => (3, vec![vec![vec![0, 1, 2]], vec![vec![0, 1]]]),
            "D4" => (4, vec![vec![vec![0, 1, 2, 3]], vec![vec![0, 2]]]),
            "A4" => (4, vec![vec![vec![0, 1, 2]], vec![vec![1, 2, 3]]]),
            "S4" => (4, vec![vec![vec![0, 1, 2, 3]], vec![vec![0, 1]]]),
            "Q8" => {
                // Left-regular action on {1, i, j, k, -1, -i, -j, -k}.
                let i = Perm::from_images(vec![1, 4, 3, 6, 5, 0, 7, 2])?;
                let j = Perm::from_images(vec![2, 7, 4, 1, 6, 3, 0, 5])?;
                return Group::generate(8, &[i, j]);
            }
            _ => {
                return Err(Error::InputError(format!("unknown builtin group {name:?}")));
            }
        };
        let gens: Result<Vec<Perm>> = cycles
            .iter()
            .map(|c| Perm::from_cycles(degree, c))
            .collect();
        Group::generate(degree, &gens?)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn identity(&self) -> Elem {
        self.inner.identity
    }

    pub fn elem(&self, idx: Elem) -> &Perm {
        &self.inner.elements[idx]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        0..self.order()
    }

    pub fn generator_indices(&self) -> &[Elem] {
        &self.inner.generators
    }

    pub fn index_of(&self, p: &Perm) -> Option<Elem> {
        self.inner.elements.binary_search(p).ok()
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.inner.mult[a * self.order() + b]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inner.inv[a]
    }

    pub fn conj(&self, f: Elem, a: Elem) -> Elem {
        // f a f^{-1}
        self.mul(self.mul(f, a), self.inv(f))
    }

    pub fn elem_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Resolves a word of generator indices to an element; empty word = identity.
    pub fn word(&self, gen_indices: &[usize]) -> Result<Elem> {
        let mut x = self.identity();
        for &w in gen_indices {
            let g = *self
                .inner
                .generators
                .get(w)
                .ok_or_else(|| Error::InputError(format!("generator index {w} out of range")))?;
            x = self.mul(x, g);
        }
        Ok(x)
    }

    /// Closure of a set of element indices, as a sorted member list.
    pub fn close_subset(&self, seed: &[Elem]) -> Vec<Elem> {
        let mut members = vec![false; self.order()];
        members[self.identity()] = true;
        let mut list = vec![self.identity()];
        let mut queue: Vec<Elem> = seed.to_vec();
        while let Some(a) = queue.pop() {
            if members[a] {
                continue;
            }
            members[a] = true;
            list.push(a);
            queue.push(self.inv(a));
            let snapshot = list.clone();
            for &b in &snapshot {
                queue.push(self.mul(a, b));
                queue.push(self.mul(b, a));
            }
        }
        list.sort_unstable();
        list
    }

    pub fn subgroup_from_members(&self, members: Vec<Elem>) -> Result<Subgroup> {
        let mut sorted = members;
        sorted.sort_unstable();
        sorted.dedup();
        if !sorted.contains(&self.identity()) {
            return Err(Error::NotASubgroup {
                reason: "missing identity".into(),
            });
        }
        for &a in &sorted {
            if sorted.binary_search(&self.inv(a)).is_err() {
                return Err(Error::NotASubgroup {
                    reason: format!("missing inverse of element {a}"),
                });
            }
            for &b in &sorted {
                if sorted.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::NotASubgroup {
                        reason: format!("not closed at ({a}, {b})"),
                    });
                }
            }
        }
        Ok(Subgroup {
            group: self.clone(),
            members: Arc::new(sorted),
        })
    }

    pub fn subgroup_generated(&self, seed: &[Elem]) -> Subgroup {
        Subgroup {
            group: self.clone(),
            members: Arc::new(self.close_subset(seed)),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_generated(&[])
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            members: Arc::new((0..self.order()).collect()),
        }
    }

    /// All subgroups, each exactly once, sorted by (order, member list).
    ///
    /// Enumeration extends each known subgroup by one outside element and
    /// closes; every subgroup is reached because its generators can be added
    /// one at a time. Computed once and cached.
    pub fn subgroups(&self) -> &[Subgroup] {
        self.inner.subgroups.get_or_init(|| {
            let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
            let trivial = vec![self.identity()];
            let mut queue: Vec<Vec<Elem>> = vec![trivial.clone()];
            found.insert(trivial);
            while let Some(h) = queue.pop() {
                for g in 0..self.order() {
                    if h.binary_search(&g).is_ok() {
                        continue;
                    }
                    let mut seed = h.clone();
                    seed.push(g);
                    let closed = self.close_subset(&seed);
                    if found.insert(closed.clone()) {
                        queue.push(closed);
                    }
                }
            }
            let mut list: Vec<Vec<Elem>> = found.into_iter().collect();
            list.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            list.into_iter()
                .map(|members| Subgroup {
                    group: self.clone(),
                    members: Arc::new(members),
                })
                .collect()
        })
    }

    /// Position of a subgroup in the canonical `subgroups()` ordering.
    pub fn subgroup_id(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups()
            .iter()
            .position(|k| k.members() == h.members())
    }

    /// Conjugacy classes of elements, each sorted, ordered by minimal member.
    pub fn conjugacy_classes(&self) -> &[Vec<Elem>] {
        self.inner.conjugacy_classes.get_or_init(|| {
            let mut seen = vec![false; self.order()];
            let mut classes = Vec::new();
            for a in 0..self.order() {
                if seen[a] {
                    continue;
                }
                let mut class: BTreeSet<Elem> = BTreeSet::new();
                for f in 0..self.order() {
                    class.insert(self.conj(f, a));
                }
                for &x in &class {
                    seen[x] = true;
                }
                classes.push(class.into_iter().collect());
            }
            classes
        })
    }

    pub fn class_of(&self, a: Elem) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.binary_search(&a).is_ok())
            .expect("element in some class")
    }
}

/// A subgroup of a fixed parent group, stored as a sorted member-index list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: Group,
    members: Arc<Vec<Elem>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.members == other.members
    }
}
impl Eq for Subgroup {}
impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &*self.members).cmp(&(other.members.len(), &*other.members))
    }
}

impl Subgroup {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.members.iter().all(|&a| other.contains(a))
    }

    pub fn index_in(&self, other: &Subgroup) -> Result<usize> {
        if !self.is_subgroup_of(other) {
            return Err(Error::NotNested {
                sub: self.order(),
                sup: other.order(),
            });
        }
        Ok(other.order() / self.order())
    }

    pub fn conjugate(&self, f: Elem) -> Subgroup {
        let mut members: Vec<Elem> = self.members.iter().map(|&a| self.group.conj(f, a)).collect();
        members.sort_unstable();
        Subgroup {
            group: self.group.clone(),
            members: Arc::new(members),
        }
    }

    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        other
            .members()
            .iter()
            .all(|&f| self.conjugate(f).members == self.members)
    }

    pub fn normalizer_in(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<Elem> = other
            .members()
            .iter()
            .copied()
            .filter(|&f| self.conjugate(f).members == self.members)
            .collect();
        Subgroup {
            group: self.group.clone(),
            members: Arc::new(members),
        }
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<Elem> = self
            .members
            .iter()
            .copied()
            .filter(|&a| other.contains(a))
            .collect();
        Subgroup {
            group: self.group.clone(),
            members: Arc::new(members),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.members
            .iter()
            .any(|&a| self.group.elem_order(a) == self.order())
    }

    /// One representative per left coset `aI` of `inner` in `self`,
    /// each the minimal member of its coset; the identity comes first.
    pub fn left_coset_reps(&self, inner: &Subgroup) -> Result<Vec<Elem>> {
        if !inner.is_subgroup_of(self) {
            return Err(Error::NotNested {
                sub: inner.order(),
                sup: self.order(),
            });
        }
        let mut covered: BTreeSet<Elem> = BTreeSet::new();
        let mut reps = Vec::with_capacity(self.order() / inner.order());
        for &a in self.members() {
            if covered.contains(&a) {
                continue;
            }
            reps.push(a);
            for &i in inner.members() {
                covered.insert(self.group.mul(a, i));
            }
        }
        Ok(reps)
    }

    /// One minimal representative per double coset `JfI` inside `self` = K.
    pub fn double_coset_reps(&self, left: &Subgroup, right: &Subgroup) -> Result<Vec<Elem>> {
        if !left.is_subgroup_of(self) || !right.is_subgroup_of(self) {
            return Err(Error::NotNested {
                sub: left.order().min(right.order()),
                sup: self.order(),
            });
        }
        let mut covered: BTreeSet<Elem> = BTreeSet::new();
        let mut reps = Vec::new();
        for &f in self.members() {
            if covered.contains(&f) {
                continue;
            }
            reps.push(f);
            for &j in left.members() {
                let jf = self.group.mul(j, f);
                for &i in right.members() {
                    covered.insert(self.group.mul(jf, i));
                }
            }
        }
        Ok(reps)
    }

    /// Members of the double coset `JfI`.
    pub fn double_coset(&self, left: &Subgroup, f: Elem, right: &Subgroup) -> Vec<Elem> {
        let mut set = BTreeSet::new();
        for &j in left.members() {
            let jf = self.group.mul(j, f);
            for &i in right.members() {
                set.insert(self.group.mul(jf, i));
            }
        }
        set.into_iter().collect()
    }
}

/// On-disk group description: `{"degree": n, "generators": [[images...], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        let gens: Result<Vec<Perm>> = self
            .generators
            .iter()
            .map(|im| Perm::from_images(im.clone()))
            .collect();
        Group::generate(self.degree, &gens?)
    }
}

/// Loads a group from a builtin name or a JSON spec file path.
pub fn load_group(spec: &str) -> Result<Group> {
    if let Ok(g) = Group::builtin(spec) {
        return Ok(g);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::InputError(format!("cannot read group spec {spec:?}: {e}")))?;
    let parsed: GroupSpec = serde_json::from_str(&text)
        .map_err(|e| Error::InputError(format!("malformed group spec {spec:?}: {e}")))?;
    parsed.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Definitional brute-force subgroup oracle for tiny groups: every subset
    /// containing the identity, closed under product and inverse.
    fn subgroups_by_subset_bruteforce(g: &Group) -> Vec<Vec<Elem>> {
        let n = g.order();
        assert!(n <= 12, "oracle is exponential");
        let mut out = Vec::new();
        'next: for mask in 0u32..(1 << n) {
            if mask & (1 << g.identity()) == 0 {
                continue;
            }
            let members: Vec<Elem> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            for &a in &members {
                if mask & (1 << g.inv(a)) == 0 {
                    continue 'next;
                }
                for &b in &members {
                    if mask & (1 << g.mul(a, b)) == 0 {
                        continue 'next;
                    }
                }
            }
            out.push(members);
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    /// Independent enumeration for |G| <= 24: closures of all generating sets
    /// of size <= 4 (enough since every subgroup of order <= 24 is
    /// 4-generated).
    fn subgroups_by_bounded_generators(g: &Group) -> Vec<Vec<Elem>> {
        let n = g.order();
        assert!(n <= 24);
        let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
        found.insert(vec![g.identity()]);
        let idx: Vec<Elem> = (0..n).collect();
        for a in 0..n {
            found.insert(g.close_subset(&[a]));
            for b in (a + 1)..n {
                found.insert(g.close_subset(&[a, b]));
                for c in (b + 1)..n {
                    found.insert(g.close_subset(&[idx[a], idx[b], idx[c]]));
                    for d in (c + 1)..n {
                        found.insert(g.close_subset(&[a, b, c, d]));
                    }
                }
            }
        }
        let mut out: Vec<Vec<Elem>> = found.into_iter().collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    #[test]
    fn generate_trivial_and_c2() {
        assert_eq!(Group::generate(1, &[]).unwrap().order(), 1);
        let c2 = Group::generate(2, &[Perm::from_cycles(2, &[vec![0, 1]]).unwrap()]).unwrap();
        assert_eq!(c2.order(), 2);
    }

    #[test]
    fn generate_s3_by_closure_oracle() {
        let s3 = Group::builtin("S3").unwrap();
        assert_eq!(s3.order(), 6);
        // breadth-first closure oracle: count distinct perms reachable
        let mut set = BTreeSet::new();
        set.insert(Perm::identity(3));
        loop {
            let mut next = set.clone();
            for p in &set {
                next.insert(p.compose(&Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap()));
                next.insert(p.compose(&Perm::from_cycles(3, &[vec![0, 1]]).unwrap()));
            }
            if next.len() == set.len() {
                break;
            }
            set = next;
        }
        assert_eq!(set.len(), s3.order());
    }

    #[test]
    fn order_cap_enforced() {
        let c6 = Perm::from_cycles(6, &[vec![0, 1, 2, 3, 4, 5]]).unwrap();
        match Group::generate_with_cap(6, &[c6], 5) {
            Err(Error::OrderCapExceeded { cap: 5 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn builtin_orders() {
        for (name, order) in [
            ("S3", 6),
            ("D4", 8),
            ("A4", 12),
            ("Q8", 8),
            ("C6", 6),
            ("S4", 24),
        ] {
            assert_eq!(Group::builtin(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn q8_has_unique_involution() {
        let q8 = Group::builtin("Q8").unwrap();
        let involutions: Vec<_> = q8
            .elements()
            .filter(|&a| a != q8.identity() && q8.elem_order(a) == 2)
            .collect();
        assert_eq!(involutions.len(), 1);
    }

    #[test]
    fn subgroup_counts_match_bruteforce() {
        for name in ["S3", "C6", "A4"] {
            let g = Group::builtin(name).unwrap();
            let got: Vec<Vec<Elem>> = g
                .subgroups()
                .iter()
                .map(|h| h.members().to_vec())
                .collect();
            let oracle = subgroups_by_subset_bruteforce(&g);
            assert_eq!(got, oracle, "{name}");
        }
    }

    #[test]
    fn subgroup_counts_match_bounded_generator_oracle() {
        for (name, count) in [("S3", 6), ("A4", 10), ("D4", 10), ("S4", 30), ("Q8", 6)] {
            let g = Group::builtin(name).unwrap();
            assert_eq!(g.subgroups().len(), count, "{name}");
            let oracle = subgroups_by_bounded_generators(&g);
            let got: Vec<Vec<Elem>> = g
                .subgroups()
                .iter()
                .map(|h| h.members().to_vec())
                .collect();
            assert_eq!(got, oracle, "{name}");
        }
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let t = Group::trivial();
        assert_eq!(t.subgroups().len(), 1);
    }

    #[test]
    fn coset_reps_partition() {
        let s3 = Group::builtin("S3").unwrap();
        let c3 = s3
            .subgroups()
            .iter()
            .find(|h| h.order() == 3)
            .unwrap()
            .clone();
        let full = s3.full_subgroup();
        let reps = full.left_coset_reps(&c3).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0], s3.identity());
        // partition oracle: cosets are disjoint and cover
        let mut covered = BTreeSet::new();
        for &a in &reps {
            for &i in c3.members() {
                assert!(covered.insert(s3.mul(a, i)), "cosets overlap");
            }
        }
        assert_eq!(covered.len(), 6);
        // the non-identity rep is a transposition (minimal in its coset)
        assert_eq!(s3.elem_order(reps[1]), 2);
    }

    #[test]
    fn coset_reps_same_subgroup() {
        let s3 = Group::builtin("S3").unwrap();
        let c3 = s3.subgroups()[4].clone();
        let reps = c3.left_coset_reps(&c3).unwrap();
        assert_eq!(reps, vec![s3.identity()]);
    }

    #[test]
    fn coset_reps_c6_over_c2() {
        let c6 = Group::builtin("C6").unwrap();
        let c2 = c6
            .subgroups()
            .iter()
            .find(|h| h.order() == 2)
            .unwrap()
            .clone();
        assert_eq!(c6.full_subgroup().left_coset_reps(&c2).unwrap().len(), 3);
    }

    #[test]
    fn coset_reps_rejects_non_nested() {
        let s3 = Group::builtin("S3").unwrap();
        let subs = s3.subgroups();
        let c2 = subs.iter().find(|h| h.order() == 2).unwrap();
        let c3 = subs.iter().find(|h| h.order() == 3).unwrap();
        assert!(c2.left_coset_reps(c3).is_err());
    }

    #[test]
    fn double_cosets_s3() {
        let s3 = Group::builtin("S3").unwrap();
        let c2 = s3
            .subgroups()
            .iter()
            .find(|h| h.order() == 2)
            .unwrap()
            .clone();
        let full = s3.full_subgroup();
        let reps = full.double_coset_reps(&c2, &c2).unwrap();
        assert_eq!(reps.len(), 2);
        let sizes: Vec<usize> = reps
            .iter()
            .map(|&f| full.double_coset(&c2, f, &c2).len())
            .collect();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn double_cosets_a4_v4_c3() {
        let a4 = Group::builtin("A4").unwrap();
        let v4 = a4
            .subgroups()
            .iter()
            .find(|h| h.order() == 4)
            .unwrap()
            .clone();
        let c3 = a4
            .subgroups()
            .iter()
            .find(|h| h.order() == 3)
            .unwrap()
            .clone();
        let full = a4.full_subgroup();
        let reps = full.double_coset_reps(&v4, &c3).unwrap();
        assert_eq!(reps.len(), 1, "|V4·C3| = 12 covers A4");
    }

    #[test]
    fn double_coset_single_when_left_is_whole() {
        let s3 = Group::builtin("S3").unwrap();
        let full = s3.full_subgroup();
        let triv = s3.trivial_subgroup();
        let reps = full.double_coset_reps(&full, &triv).unwrap();
        assert_eq!(reps, vec![s3.identity()]);
    }

    /// Orbit-counting identity: [K:J] = sum over f in J\K/I of [I : I ∩ f^{-1}Jf].
    #[test]
    fn orbit_counting_identity_exhaustive() {
        for name in ["S3", "D4", "A4"] {
            let g = Group::builtin(name).unwrap();
            for k in g.subgroups() {
                let subs_of_k: Vec<&Subgroup> = g
                    .subgroups()
                    .iter()
                    .filter(|h| h.is_subgroup_of(k))
                    .collect();
                for j in &subs_of_k {
                    for i in &subs_of_k {
                        let reps = k.double_coset_reps(j, i).unwrap();
                        let total: usize = reps
                            .iter()
                            .map(|&f| {
                                let fi = g.inv(f);
                                let conj_j = j.conjugate(fi);
                                let meet = conj_j.intersect(i);
                                i.order() / meet.order()
                            })
                            .sum();
                        assert_eq!(total, k.order() / j.order(), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn conjugate_subgroup_has_same_order() {
        let a4 = Group::builtin("A4").unwrap();
        for h in a4.subgroups() {
            for f in a4.elements() {
                let c = h.conjugate(f);
                assert_eq!(c.order(), h.order());
                assert!(a4.subgroup_id(&c).is_some());
            }
        }
    }

    #[test]
    fn group_spec_json_roundtrip() {
        let spec: GroupSpec =
            serde_json::from_str(r#"{"degree": 3, "generators": [[1,2,0],[1,0,2]]}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 6);
        let bad: std::result::Result<GroupSpec, _> = serde_json::from_str(r#"{"degree": 3}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn word_resolution() {
        let s3 = Group::builtin("S3").unwrap();
        assert_eq!(s3.word(&[]).unwrap(), s3.identity());
        let r = s3.word(&[0]).unwrap();
        assert_eq!(s3.elem_order(r), 3);
        assert!(s3.word(&[7]).is_err());
    }
}
