//! Finite group arithmetic on validated multiplication tables.
//!
//! Elements are `0..n` with the identity always stored at index 0; the
//! constructor relabels the input table so downstream formulas never have
//! to carry an identity index around. Groups are compared by table identity
//! only, never up to isomorphism.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// How thoroughly `from_table` checks associativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Check all n^3 triples. Required for n <= `ASSOC_EXHAUSTIVE_LIMIT`.
    Exhaustive,
    /// Deterministically sample >= n^3 random triples. Only allowed above
    /// the exhaustive limit, behind the CLI's `--trust-table` flag.
    Sampled,
}

/// Orders up to this bound are always validated exhaustively.
pub const ASSOC_EXHAUSTIVE_LIMIT: usize = 256;

/// Default cap on the order of a group generated from permutations.
pub const PERM_ORDER_CAP: usize = 20_160;

/// A finite group as a validated Cayley table. Identity is index 0.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    label: Option<String>,
}

impl PartialEq for FiniteGroup {
    // table identity; labels are display-only
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}
impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({}, order {})",
            self.label.as_deref().unwrap_or("?"),
            self.order
        )
    }
}

impl FiniteGroup {
    /// Builds a group from an n x n table, relocating the identity to
    /// index 0 (remaining elements keep their original relative order).
    pub fn from_table(table: &[Vec<usize>], label: Option<&str>) -> Result<Arc<Self>> {
        Self::from_table_with(table, label, Validation::Exhaustive)
    }

    pub fn from_table_with(
        table: &[Vec<usize>],
        label: Option<&str>,
        validation: Validation,
    ) -> Result<Arc<Self>> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(Error::InvalidTable(format!(
                        "entry at ({i},{j}) is {e}, out of range [0,{n})"
                    )));
                }
            }
        }

        // locate the two-sided identity
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;

        // permutation old -> new: identity first, the rest in original order
        let mut to_new = vec![0usize; n];
        let mut next = 1;
        for old in 0..n {
            if old == identity {
                to_new[old] = 0;
            } else {
                to_new[old] = next;
                next += 1;
            }
        }
        let mut mul = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[to_new[x] * n + to_new[y]] = to_new[table[x][y]];
            }
        }

        let g = Self::validate(n, mul, label.map(|s| s.to_string()), validation)?;
        Ok(Arc::new(g))
    }

    fn validate(
        n: usize,
        mul: Vec<usize>,
        label: Option<String>,
        validation: Validation,
    ) -> Result<Self> {
        let at = |x: usize, y: usize| mul[x * n + y];
        match validation {
            Validation::Exhaustive => {
                if n > ASSOC_EXHAUSTIVE_LIMIT {
                    return Err(Error::SizeLimitExceeded(format!(
                        "order {n} exceeds exhaustive associativity limit \
                         {ASSOC_EXHAUSTIVE_LIMIT}; pass --trust-table to sample instead"
                    )));
                }
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if at(at(x, y), z) != at(x, at(y, z)) {
                                return Err(Error::InvalidTable(format!(
                                    "not associative at triple ({x},{y},{z})"
                                )));
                            }
                        }
                    }
                }
            }
            Validation::Sampled => {
                // deterministic splitmix64 stream, >= n^3 triples
                let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
                let mut next_u64 = move || {
                    state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                    let mut z = state;
                    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                    z ^ (z >> 31)
                };
                let samples = n.saturating_mul(n).saturating_mul(n);
                for _ in 0..samples {
                    let x = (next_u64() % n as u64) as usize;
                    let y = (next_u64() % n as u64) as usize;
                    let z = (next_u64() % n as u64) as usize;
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at sampled triple ({x},{y},{z})"
                        )));
                    }
                }
            }
        }

        // identity at 0 (holds by construction, re-checked here)
        for x in 0..n {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::InvalidTable(format!("index 0 is not an identity at {x}")));
            }
        }

        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| at(x, y) == 0 && at(y, x) == 0) {
                Some(y) => inv[x] = y,
                None => {
                    return Err(Error::InvalidTable(format!("element {x} has no inverse")));
                }
            }
        }

        Ok(Self { order: n, mul, inv, label })
    }

    /// Closes a permutation generating set breadth-first and returns the
    /// Cayley table of the generated group. Element 0 is the identity;
    /// the rest appear in BFS discovery order (generators applied on the
    /// right, in the given order).
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        label: Option<&str>,
        order_cap: usize,
    ) -> Result<Arc<Self>> {
        for (i, p) in generators.iter().enumerate() {
            if p.len() != degree {
                return Err(Error::NotAPermutation(format!(
                    "generator {i} has length {}, expected {degree}",
                    p.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &img in p {
                if img >= degree {
                    return Err(Error::NotAPermutation(format!(
                        "generator {i} maps outside [0,{degree})"
                    )));
                }
                if seen[img] {
                    return Err(Error::NotAPermutation(format!("generator {i} is not injective")));
                }
                seen[img] = true;
            }
        }

        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
            // (p * q)(x) = p(q(x))
            (0..degree).map(|x| p[q[x]]).collect()
        };

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for gen in generators {
                let next = compose(&cur, gen);
                if !index.contains_key(&next) {
                    if elements.len() + 1 > order_cap {
                        return Err(Error::SizeLimitExceeded(format!(
                            "generated group exceeds order cap {order_cap}"
                        )));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }

        let n = elements.len();
        let mut mul = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[x * n + y] = index[&compose(&elements[x], &elements[y])];
            }
        }
        let g = Self::validate(n, mul, label.map(|s| s.to_string()), Validation::Exhaustive)?;
        Ok(Arc::new(g))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// g x g^-1
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut cur = x;
        let mut k = 1;
        while cur != 0 {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// x^k for k >= 0
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }
}

/// A subgroup of a fixed parent group, stored as a sorted member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl Subgroup {
    /// Smallest subgroup of `parent` containing `seeds`.
    pub fn generated(parent: &Arc<FiniteGroup>, seeds: &[usize]) -> Result<Self> {
        for &s in seeds {
            if s >= parent.order() {
                return Err(Error::IndexOutOfRange { index: s, order: parent.order() });
            }
        }
        let mut in_set = vec![false; parent.order()];
        in_set[0] = true;
        let mut frontier: Vec<usize> = vec![0];
        for &s in seeds {
            if !in_set[s] {
                in_set[s] = true;
                frontier.push(s);
            }
        }
        let mut head = 0;
        while head < frontier.len() {
            let x = frontier[head];
            head += 1;
            let candidates: Vec<usize> = frontier
                .iter()
                .map(|&y| parent.mul(x, y))
                .chain(frontier.iter().map(|&y| parent.mul(y, x)))
                .chain(std::iter::once(parent.inv(x)))
                .collect();
            for c in candidates {
                if !in_set[c] {
                    in_set[c] = true;
                    frontier.push(c);
                }
            }
        }
        let members: Vec<usize> = (0..parent.order()).filter(|&x| in_set[x]).collect();
        Ok(Self { parent: Arc::clone(parent), members })
    }

    pub fn from_members(parent: &Arc<FiniteGroup>, members: &[usize]) -> Result<Self> {
        let sub = Self::generated(parent, members)?;
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if !sorted.contains(&0) {
            sorted.insert(0, 0);
        }
        if sub.members != sorted {
            return Err(Error::InvalidTable(format!(
                "member list {sorted:?} is not closed under multiplication and inverse"
            )));
        }
        Ok(sub)
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self { parent: Arc::clone(parent), members: vec![0] }
    }

    pub fn full(parent: &Arc<FiniteGroup>) -> Self {
        Self { parent: Arc::clone(parent), members: (0..parent.order()).collect() }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// true iff g n g^-1 stays in the subgroup for every g in the parent.
    pub fn is_normal(&self) -> bool {
        self.parent
            .elements()
            .all(|g| self.members.iter().all(|&n| self.contains(self.parent.conj(g, n))))
    }

    /// Re-indexes the subgroup as a standalone group. Returns the group and
    /// the member list mapping new indices to parent indices (new index i is
    /// parent element `members[i]`; 0 maps to 0 since members are sorted).
    pub fn as_group(&self) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
        let pos: HashMap<usize, usize> =
            self.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let table: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|&x| self.members.iter().map(|&y| pos[&self.parent.mul(x, y)]).collect())
            .collect();
        let g = FiniteGroup::from_table(&table, self.parent.label())?;
        Ok((g, self.members.clone()))
    }
}

/// The quotient G/N together with the projection homomorphism.
/// Cosets are ordered by ascending minimal representative, so the coset of
/// the identity is element 0.
pub fn quotient_group(
    parent: &Arc<FiniteGroup>,
    normal: &Subgroup,
) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = parent.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for g in 0..n {
        if coset_of[g] == usize::MAX {
            let idx = reps.len();
            reps.push(g);
            for &m in normal.members() {
                coset_of[parent.mul(g, m)] = idx;
            }
        }
    }
    let q = reps.len();
    let table: Vec<Vec<usize>> = (0..q)
        .map(|i| (0..q).map(|j| coset_of[parent.mul(reps[i], reps[j])]).collect())
        .collect();
    let label = parent.label().map(|l| format!("{l}/N"));
    let quotient = FiniteGroup::from_table(&table, label.as_deref())?;
    let proj = GroupHom::new(parent, &quotient, coset_of)?;
    Ok((quotient, proj))
}

pub fn center(group: &Arc<FiniteGroup>) -> Subgroup {
    let members: Vec<usize> = group
        .elements()
        .filter(|&z| group.elements().all(|g| group.mul(z, g) == group.mul(g, z)))
        .collect();
    Subgroup { parent: Arc::clone(group), members }
}

/// Least g with g X g^-1 = Y, if any.
pub fn are_conjugate_subgroups(
    group: &Arc<FiniteGroup>,
    x: &Subgroup,
    y: &Subgroup,
) -> Option<usize> {
    if x.order() != y.order() {
        return None;
    }
    group.elements().find(|&g| {
        let mut conj: Vec<usize> = x.members().iter().map(|&m| group.conj(g, m)).collect();
        conj.sort_unstable();
        conj == y.members()
    })
}

/// A validated homomorphism between two finite groups, stored as an image
/// table over the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    dom: Arc<FiniteGroup>,
    cod: Arc<FiniteGroup>,
    image: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        dom: &Arc<FiniteGroup>,
        cod: &Arc<FiniteGroup>,
        image: Vec<usize>,
    ) -> Result<Self> {
        if image.len() != dom.order() {
            return Err(Error::NotAHomomorphism(format!(
                "image table has length {}, expected {}",
                image.len(),
                dom.order()
            )));
        }
        for &v in &image {
            if v >= cod.order() {
                return Err(Error::IndexOutOfRange { index: v, order: cod.order() });
            }
        }
        for x in dom.elements() {
            for y in dom.elements() {
                if image[dom.mul(x, y)] != cod.mul(image[x], image[y]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({x}*{y}) != f({x})*f({y})"
                    )));
                }
            }
        }
        Ok(Self { dom: Arc::clone(dom), cod: Arc::clone(cod), image })
    }

    pub fn identity(group: &Arc<FiniteGroup>) -> Self {
        Self {
            dom: Arc::clone(group),
            cod: Arc::clone(group),
            image: (0..group.order()).collect(),
        }
    }

    pub fn dom(&self) -> &Arc<FiniteGroup> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteGroup> {
        &self.cod
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image_table(&self) -> &[usize] {
        &self.image
    }

    /// self after other: (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if other.cod != self.dom {
            return Err(Error::NotAHomomorphism("composition domains do not match".into()));
        }
        let image = other.image.iter().map(|&x| self.image[x]).collect();
        GroupHom::new(&other.dom, &self.cod, image)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.image.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        for &v in &self.image {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> =
            self.dom.elements().filter(|&x| self.image[x] == 0).collect();
        Subgroup { parent: Arc::clone(&self.dom), members }
    }

    pub fn image_subgroup(&self) -> Subgroup {
        let mut members: Vec<usize> = self.image.clone();
        members.sort_unstable();
        members.dedup();
        Subgroup { parent: Arc::clone(&self.cod), members }
    }

    /// Least preimage of a codomain element, if any.
    pub fn preimage(&self, y: usize) -> Option<usize> {
        self.dom.elements().find(|&x| self.image[x] == y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    /// Independent oracle: S3 as explicit permutation composition on {0,1,2}.
    fn s3_by_enumeration() -> Vec<Vec<usize>> {
        let mut perms = Vec::new();
        for a in 0..3usize {
            for b in 0..3usize {
                for c in 0..3usize {
                    if a != b && b != c && a != c {
                        perms.push(vec![a, b, c]);
                    }
                }
            }
        }
        perms
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_table(&[vec![0]], Some("1")).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn c2_from_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], Some("C2")).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn identity_relocated_to_zero() {
        // C3 table with identity at index 2
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_table(&table, None).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 2);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn s3_has_three_involutions() {
        // oracle: compose permutations of 3 points directly
        let perms = s3_by_enumeration();
        let idx = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx(&(0..3).map(|x| p[q[x]]).collect())).collect())
            .collect();
        let g = FiniteGroup::from_table(&table, Some("S3")).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let involutions = g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 3);
    }

    #[test]
    fn non_associative_table_rejected() {
        // a Latin square with identity but (1*1)*2 = 2 while 1*(1*2) = 4
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        match FiniteGroup::from_table(&table, None) {
            Err(Error::InvalidTable(msg)) => assert!(msg.contains("associative"), "{msg}"),
            other => panic!("expected InvalidTable, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_entry_rejected() {
        let table = vec![vec![0, 1], vec![1, 5]];
        assert!(matches!(
            FiniteGroup::from_table(&table, None),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn cyclic_from_single_cycle() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 2, 0]], Some("C3"), PERM_ORDER_CAP)
            .unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn s3_from_generators_matches_enumeration() {
        let g = FiniteGroup::from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
            Some("S3"),
            PERM_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), s3_by_enumeration().len());
        assert!(!g.is_abelian());
    }

    #[test]
    fn d4_from_generators() {
        // oracle: symmetries of the square = 8 by brute force over all 24
        // permutations of 4 points preserving adjacency of the 4-cycle
        let adjacency = |a: usize, b: usize| (a + 1) % 4 == b || (b + 1) % 4 == a;
        let mut count = 0;
        let mut perm = vec![0, 1, 2, 3];
        // enumerate permutations of 4 points
        fn heap(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if k == 1 {
                f(p);
                return;
            }
            for i in 0..k {
                heap(k - 1, p, f);
                if k % 2 == 0 {
                    p.swap(i, k - 1);
                } else {
                    p.swap(0, k - 1);
                }
            }
        }
        heap(4, &mut perm, &mut |p| {
            if (0..4).all(|i| adjacency(p[i], p[(i + 1) % 4])) {
                count += 1;
            }
        });
        assert_eq!(count, 8);

        let g = FiniteGroup::from_permutations(
            4,
            &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]],
            Some("D4"),
            PERM_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn not_a_permutation_rejected() {
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], None, PERM_ORDER_CAP),
            Err(Error::NotAPermutation(_))
        ));
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], None, 5),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn subgroup_generated_in_c4() {
        let c4 = corpus::cyclic(4);
        let h = Subgroup::generated(&c4, &[2]).unwrap();
        assert_eq!(h.members(), &[0, 2]);
    }

    #[test]
    fn transposition_generates_order_two() {
        let s3 = corpus::symmetric3();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = Subgroup::generated(&s3, &[t]).unwrap();
        assert_eq!(h.order(), 2);
    }

    #[test]
    fn two_transpositions_generate_s3() {
        let s3 = corpus::symmetric3();
        let ts: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) == 2).collect();
        let h = Subgroup::generated(&s3, &[ts[0], ts[1]]).unwrap();
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn generated_is_idempotent() {
        let s3 = corpus::symmetric3();
        for seed in s3.elements() {
            let h = Subgroup::generated(&s3, &[seed]).unwrap();
            let h2 = Subgroup::generated(&s3, h.members()).unwrap();
            assert_eq!(h.members(), h2.members());
        }
    }

    #[test]
    fn normality() {
        let c4 = corpus::cyclic(4);
        assert!(Subgroup::generated(&c4, &[2]).unwrap().is_normal());

        let s3 = corpus::symmetric3();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(Subgroup::generated(&s3, &[c]).unwrap().is_normal());
        // oracle: conjugate the transposition by a 3-cycle and test membership
        let h = Subgroup::generated(&s3, &[t]).unwrap();
        assert!(!h.contains(s3.conj(c, t)));
        assert!(!h.is_normal());
    }

    #[test]
    fn quotients() {
        let c4 = corpus::cyclic(4);
        let n = Subgroup::generated(&c4, &[2]).unwrap();
        let (q, proj) = quotient_group(&c4, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.apply(1), proj.apply(3));
        assert_ne!(proj.apply(1), 0);
        assert_eq!(proj.kernel().members(), n.members());
        assert!(proj.is_surjective());

        let s3 = corpus::symmetric3();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let n3 = Subgroup::generated(&s3, &[c]).unwrap();
        let (q3, _) = quotient_group(&s3, &n3).unwrap();
        assert_eq!(q3.order(), 2);

        let (q1, p1) = quotient_group(&s3, &Subgroup::full(&s3)).unwrap();
        assert_eq!(q1.order(), 1);
        assert!(s3.elements().all(|g| p1.apply(g) == 0));

        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let bad = Subgroup::generated(&s3, &[t]).unwrap();
        assert!(matches!(quotient_group(&s3, &bad), Err(Error::NotNormal)));
    }

    #[test]
    fn centers() {
        let c6 = corpus::cyclic(6);
        assert_eq!(center(&c6).order(), 6);

        let s3 = corpus::symmetric3();
        assert_eq!(center(&s3).members(), &[0]);

        let d4 = corpus::dihedral4();
        let z = center(&d4);
        assert_eq!(z.order(), 2);
        assert!(z.members().iter().all(|&x| x == 0 || d4.element_order(x) == 2));
    }

    #[test]
    fn conjugate_subgroups() {
        let s3 = corpus::symmetric3();
        let ts: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) == 2).collect();
        let x = Subgroup::generated(&s3, &[ts[0]]).unwrap();
        let y = Subgroup::generated(&s3, &[ts[1]]).unwrap();
        assert_eq!(are_conjugate_subgroups(&s3, &x, &x), Some(0));
        let g = are_conjugate_subgroups(&s3, &x, &y).expect("transposition subgroups conjugate");
        assert_eq!(s3.element_order(g), 3);
        // symmetric with inverted witness
        let g2 = are_conjugate_subgroups(&s3, &y, &x).unwrap();
        let mut conj: Vec<usize> = x.members().iter().map(|&m| s3.conj(g, m)).collect();
        conj.sort_unstable();
        assert_eq!(conj, y.members());
        assert_ne!(g2, 0);

        let klein = corpus::klein();
        let a = Subgroup::generated(&klein, &[1]).unwrap();
        let b = Subgroup::generated(&klein, &[2]).unwrap();
        assert_eq!(are_conjugate_subgroups(&klein, &a, &b), None);
    }

    #[test]
    fn hom_validation() {
        let c4 = corpus::cyclic(4);
        let c2 = corpus::cyclic(2);
        let proj = GroupHom::new(&c4, &c2, vec![0, 1, 0, 1]).unwrap();
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel().members(), &[0, 2]);
        assert!(GroupHom::new(&c4, &c2, vec![0, 1, 1, 0]).is_err());
    }
}
