//! Finite groups given by Cayley tables, subgroups, and left coset spaces.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type GroupRef = Arc<FiniteGroup>;

/// A finite group with a frozen element order. Element `i` is named
/// `names[i]`; `table[a][b]` is the index of the product `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Wire form of a group: `{"elements":["e","s"],"table":[[0,1],[1,0]],"identity":0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: Option<usize>,
}

impl FiniteGroup {
    /// Validates the table as a group law. When `identity` is `None` the
    /// identity is located in the table.
    pub fn from_table(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: Option<usize>,
    ) -> Result<FiniteGroup> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotAGroup { axiom: "nonempty", witness: vec![] });
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::Parse("duplicate group element names".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!("group table must be {n}x{n}")));
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(Error::BadIndex(format!("table[{a}][{b}] = {c}")));
                }
            }
        }
        let identity = match identity {
            Some(e) if e >= n => return Err(Error::BadIndex(format!("identity {e}"))),
            Some(e) => e,
            None => (0..n)
                .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
                .ok_or(Error::NotAGroup { axiom: "identity", witness: vec![] })?,
        };
        for g in 0..n {
            if table[identity][g] != g || table[g][identity] != g {
                return Err(Error::NotAGroup { axiom: "identity", witness: vec![identity, g] });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup {
                            axiom: "associativity",
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or(Error::NotAGroup { axiom: "inverse", witness: vec![g] })?;
            inverses.push(inv);
        }
        Ok(FiniteGroup { names, table, identity, inverses })
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<FiniteGroup> {
        FiniteGroup::from_table(spec.elements.clone(), spec.table.clone(), spec.identity)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            elements: self.names.clone(),
            table: self.table.clone(),
            identity: Some(self.identity),
        }
    }

    /// Cyclic group of order `n`; elements `e, g, g^2, ...`. For `n = 2`
    /// the generator is named `s`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group needs positive order");
        let names = (0..n)
            .map(|k| match (k, n) {
                (0, _) => "e".to_string(),
                (1, 2) => "s".to_string(),
                (1, _) => "g".to_string(),
                (k, _) => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(names, table, Some(0)).expect("cyclic table is a group")
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// The symmetric group on three letters, built by composing permutations.
    /// Products follow the convention `(pq)(x) = p(q(x))`.
    pub fn symmetric3() -> FiniteGroup {
        let perms: [([usize; 3], &str); 6] = [
            ([0, 1, 2], "e"),
            ([1, 0, 2], "(12)"),
            ([2, 1, 0], "(13)"),
            ([0, 2, 1], "(23)"),
            ([1, 2, 0], "(123)"),
            ([2, 0, 1], "(132)"),
        ];
        let index: BTreeMap<[usize; 3], usize> =
            perms.iter().enumerate().map(|(i, (p, _))| (*p, i)).collect();
        let table = perms
            .iter()
            .map(|(p, _)| {
                perms
                    .iter()
                    .map(|(q, _)| index[&[p[q[0]], p[q[1]], p[q[2]]]])
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|(_, name)| name.to_string()).collect();
        FiniteGroup::from_table(names, table, Some(0)).expect("permutation table is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::BadIndex(format!("no group element named {name:?}")))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Product of a word of element indices, left to right.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &g| self.mul(acc, g))
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: BTreeSet<usize> = [self.identity].into();
        for g in self.elements() {
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// The subgroup generated by `gens`, as a sorted index set.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = [self.identity].into();
        let mut queue: VecDeque<usize> = [self.identity].into();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// A homomorphism to `{+1, -1}` (encoded as `false`/`true` for the
    /// sign), the first nontrivial one found by sign assignments on the
    /// generators; `None` if only the trivial one exists.
    pub fn sign_character(&self) -> Option<Vec<bool>> {
        let gens = self.generators();
        for mask in 1u64..(1u64 << gens.len()) {
            let mut sign: Vec<Option<bool>> = vec![None; self.order()];
            sign[self.identity] = Some(false);
            let mut queue: VecDeque<usize> = [self.identity].into();
            let mut consistent = true;
            while let Some(x) = queue.pop_front() {
                for (k, &g) in gens.iter().enumerate() {
                    let y = self.mul(x, g);
                    let s = sign[x].unwrap() ^ (mask >> k & 1 == 1);
                    match sign[y] {
                        None => {
                            sign[y] = Some(s);
                            queue.push_back(y);
                        }
                        Some(t) if t != s => consistent = false,
                        _ => {}
                    }
                }
            }
            if consistent {
                return Some(sign.into_iter().map(|s| s.unwrap()).collect());
            }
        }
        None
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(", "))
    }
}

/// A subgroup, stored as the sorted list of parent indices together with
/// the induced group structure (whose element `k` is parent element
/// `members[k]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: GroupRef,
    members: Vec<usize>,
    local: GroupRef,
}

impl Subgroup {
    pub fn new(parent: GroupRef, members: &[usize]) -> Result<Subgroup> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&g| g >= parent.order()) {
            return Err(Error::NotASubgroup(format!("index {bad} out of range")));
        }
        if !set.contains(&parent.identity()) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(Error::NotASubgroup(format!(
                    "inverse of {} missing",
                    parent.name(a)
                )));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "{}*{} leaves the subset",
                        parent.name(a),
                        parent.name(b)
                    )));
                }
            }
        }
        let members: Vec<usize> = set.into_iter().collect();
        let pos = |g: usize| members.iter().position(|&m| m == g).unwrap();
        let names = members.iter().map(|&g| parent.name(g).to_string()).collect();
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos(parent.mul(a, b))).collect())
            .collect();
        let local = FiniteGroup::from_table(names, table, Some(pos(parent.identity())))?;
        Ok(Subgroup { parent, members, local: Arc::new(local) })
    }

    pub fn from_names(parent: GroupRef, names: &[String]) -> Result<Subgroup> {
        let members = names
            .iter()
            .map(|n| {
                parent
                    .index_of(n)
                    .map_err(|_| Error::NotASubgroup(format!("unknown element {n:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subgroup::new(parent, &members)
    }

    pub fn trivial(parent: GroupRef) -> Subgroup {
        let e = parent.identity();
        Subgroup::new(parent, &[e]).expect("trivial subgroup")
    }

    pub fn whole(parent: GroupRef) -> Subgroup {
        let all: Vec<usize> = parent.elements().collect();
        Subgroup::new(parent, &all).expect("whole group")
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    /// The subgroup as a group in its own right.
    pub fn group(&self) -> &GroupRef {
        &self.local
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Parent index -> index in [`Subgroup::group`].
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }
}

/// Left cosets `gH` with a pointed section: each coset has one chosen
/// representative and the coset `H` is represented by the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    subgroup: Subgroup,
    cosets: Vec<Vec<usize>>,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    /// Cosets are ordered by their smallest element (so `H` comes first
    /// whenever the identity has index 0), and represented by that element,
    /// except that `H` is always represented by the identity.
    pub fn new(subgroup: Subgroup) -> CosetSpace {
        let g = subgroup.parent().clone();
        let e = g.identity();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut reps = Vec::new();
        let mut order: Vec<usize> = vec![e];
        order.extend(g.elements().filter(|&x| x != e));
        for x in order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> =
                subgroup.members().iter().map(|&h| g.mul(x, h)).collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y] = cosets.len();
            }
            reps.push(x);
            cosets.push(coset);
        }
        CosetSpace { subgroup, cosets, reps, coset_of }
    }

    /// Same cosets with a caller-chosen section; `reps` lists one parent
    /// index per coset in any order.
    pub fn with_section(subgroup: Subgroup, reps: &[usize]) -> Result<CosetSpace> {
        let mut space = CosetSpace::new(subgroup);
        if reps.len() != space.cosets.len() {
            return Err(Error::NotASubgroup(format!(
                "section must list {} representatives",
                space.cosets.len()
            )));
        }
        let mut chosen = vec![usize::MAX; space.cosets.len()];
        for &r in reps {
            let c = *space
                .coset_of
                .get(r)
                .ok_or_else(|| Error::BadIndex(format!("representative {r}")))?;
            if chosen[c] != usize::MAX {
                return Err(Error::NotASubgroup("two representatives for one coset".into()));
            }
            chosen[c] = r;
        }
        let e = space.parent().identity();
        if chosen[space.coset_of[e]] != e {
            return Err(Error::NotASubgroup("section is not pointed".into()));
        }
        space.reps = chosen;
        Ok(space)
    }

    pub fn parent(&self) -> &GroupRef {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// Writes `g = r h` with `r` the representative of `gH`; returns the
    /// coset index and `h` as a parent index.
    pub fn decompose(&self, g: usize) -> (usize, usize) {
        let grp = self.parent();
        let c = self.coset_of[g];
        (c, grp.mul(grp.inv(self.reps[c]), g))
    }

    /// Left translation `g . (xH) = (gx)H`.
    pub fn translate(&self, g: usize, coset: usize) -> usize {
        self.coset_of[self.parent().mul(g, self.reps[coset])]
    }

    /// Display label of a coset, `"<rep>H"`.
    pub fn label(&self, coset: usize) -> String {
        format!("{}H", self.parent().name(self.reps[coset]))
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|c| self.label(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn c2_table_is_a_group() {
        let g = FiniteGroup::from_table(names(&["e", "s"]), vec![vec![0, 1], vec![1, 0]], None)
            .unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g, FiniteGroup::cyclic(2));
    }

    #[test]
    fn s3_matches_permutation_composition() {
        let g = FiniteGroup::symmetric3();
        let perm = |i: usize| -> [usize; 3] {
            [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]][i]
        };
        for a in g.elements() {
            for b in g.elements() {
                let (p, q) = (perm(a), perm(b));
                let composed = [p[q[0]], p[q[1]], p[q[2]]];
                assert_eq!(perm(g.mul(a, b)), composed);
            }
        }
        // not abelian
        assert_ne!(g.mul(1, 2), g.mul(2, 1));
    }

    #[test]
    fn broken_tables_are_rejected() {
        // identity row fine, but 1*1 = 0 and 1*2 = 0: not a latin square
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        let err = FiniteGroup::from_table(names(&["e", "a", "b"]), bad, Some(0)).unwrap_err();
        assert_eq!(err.kind(), "NotAGroup");

        // a "left zero" style operation on two elements: x*y = x
        let nonassoc = vec![vec![0, 1], vec![1, 1]];
        let err = FiniteGroup::from_table(names(&["e", "z"]), nonassoc, Some(0)).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { axiom: "inverse", .. }));
    }

    #[test]
    fn associativity_witness_reported() {
        // e is an identity and every element is its own inverse, but the
        // remaining products are not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(names(&["e", "a", "b", "c", "d"]), t, Some(0))
            .unwrap_err();
        match err {
            Error::NotAGroup { axiom: "associativity", witness } => assert_eq!(witness.len(), 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cosets_of_trivial_subgroup_in_c2() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let cs = CosetSpace::new(Subgroup::trivial(g));
        assert_eq!(cs.cosets(), &[vec![0], vec![1]]);
        assert_eq!(cs.reps(), &[0, 1]);
    }

    #[test]
    fn cosets_of_c3_in_s3() {
        let g = Arc::new(FiniteGroup::symmetric3());
        let h = Subgroup::from_names(g.clone(), &names(&["e", "(123)", "(132)"])).unwrap();
        assert_eq!(h.group().order(), 3);
        let cs = CosetSpace::new(h);
        assert_eq!(cs.len(), 2);
        // oracle: compute gH directly from the table
        for x in g.elements() {
            let mut coset: Vec<usize> = [0, 4, 5].iter().map(|&k| g.mul(x, k)).collect();
            coset.sort_unstable();
            assert_eq!(cs.cosets()[cs.coset_of(x)], coset);
            assert_eq!(coset.len(), 3);
        }
        assert_eq!(cs.rep(cs.coset_of(0)), 0);
        for x in g.elements() {
            let (c, h) = cs.decompose(x);
            assert!(cs.subgroup().contains(h));
            assert_eq!(g.mul(cs.rep(c), h), x);
        }
    }

    #[test]
    fn whole_group_single_coset() {
        let g = Arc::new(FiniteGroup::symmetric3());
        let cs = CosetSpace::new(Subgroup::whole(g));
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.reps(), &[0]);
    }

    #[test]
    fn non_subgroups_rejected() {
        let g = Arc::new(FiniteGroup::symmetric3());
        let err = Subgroup::new(g.clone(), &[0, 1, 2]).unwrap_err();
        assert_eq!(err.kind(), "NotASubgroup");
        assert!(Subgroup::new(g, &[1]).is_err());
    }

    #[test]
    fn custom_section_must_be_pointed() {
        let g = Arc::new(FiniteGroup::cyclic(4));
        let h = Subgroup::new(g.clone(), &[0, 2]).unwrap();
        let cs = CosetSpace::with_section(h.clone(), &[0, 3]).unwrap();
        assert_eq!(cs.reps(), &[0, 3]);
        assert!(CosetSpace::with_section(h, &[2, 1]).is_err());
    }

    #[test]
    fn sign_characters() {
        let s3 = FiniteGroup::symmetric3();
        let sign = s3.sign_character().unwrap();
        assert_eq!(sign, vec![false, true, true, true, false, false]);
        assert!(FiniteGroup::cyclic(3).sign_character().is_none());
        assert_eq!(FiniteGroup::cyclic(2).sign_character().unwrap(), vec![false, true]);
    }

    #[test]
    fn group_spec_round_trip() {
        let json = r#"{"elements":["e","s"],"table":[[0,1],[1,0]],"identity":0}"#;
        let spec: GroupSpec = serde_json::from_str(json).unwrap();
        let g = FiniteGroup::from_spec(&spec).unwrap();
        assert_eq!(g.to_spec(), spec);
    }
}
