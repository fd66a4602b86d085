//! Semidirect products E = G ⋉ A, complements of A in E, and the
//! correspondence between complements and derivations.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::cohomology::{Derivation, H1, PointedMap, PointedSet};
use crate::gmodule::GModule;
use crate::group::{FiniteGroup, GroupHom, Subgroup};
use crate::{Error, Result};

/// Order cap for materializing the product group.
pub const SEMIDIRECT_ORDER_CAP: usize = 10_000;

/// The brute-force complement search covers subgroups generated by at most
/// three elements, which suffices for acting groups up to this order.
pub const BRUTEFORCE_GROUP_CAP: usize = 12;

/// E = G ⋉ A with elements indexed as (g, a) -> g * |A| + a and
/// multiplication (g, a)(h, b) = (gh, act(h^-1, a) * b).
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    module: GModule,
    group: Arc<FiniteGroup>,
    embed_g: GroupHom,
    embed_a: GroupHom,
}

pub fn semidirect(m: &GModule) -> Result<SemidirectProduct> {
    let g = m.group();
    let a = m.coeff();
    let ng = g.order();
    let na = a.order();
    let order = ng
        .checked_mul(na)
        .filter(|&n| n <= SEMIDIRECT_ORDER_CAP)
        .ok_or_else(|| {
            Error::SizeLimitExceeded(format!(
                "semidirect product order {ng} x {na} exceeds cap {SEMIDIRECT_ORDER_CAP}"
            ))
        })?;

    let idx = |gg: usize, aa: usize| gg * na + aa;
    let mut table = vec![vec![0usize; order]; order];
    for g1 in 0..ng {
        for a1 in 0..na {
            for g2 in 0..ng {
                for a2 in 0..na {
                    let gg = g.mul(g1, g2);
                    let aa = a.mul(m.act(g.inv(g2), a1), a2);
                    table[idx(g1, a1)][idx(g2, a2)] = idx(gg, aa);
                }
            }
        }
    }
    // identity (1, 1) already sits at index 0, so the indexing scheme
    // survives table validation unchanged
    let group = FiniteGroup::from_table(&table, m.group().label())?;

    let embed_g = GroupHom::new(g, &group, (0..ng).map(|gg| idx(gg, 0)).collect())?;
    let embed_a = GroupHom::new(a, &group, (0..na).map(|aa| idx(0, aa)).collect())?;

    // the action must be recovered by conjugation, and every element must
    // factor as embed_g(g) * embed_a(a)
    for gg in 0..ng {
        for aa in 0..na {
            let lhs = group.conj(embed_g.apply(gg), embed_a.apply(aa));
            if lhs != embed_a.apply(m.act(gg, aa)) {
                return Err(Error::NotAnAction(
                    "conjugation in the product does not recover the action".into(),
                ));
            }
            if group.mul(embed_g.apply(gg), embed_a.apply(aa)) != idx(gg, aa) {
                return Err(Error::InvalidTable(
                    "element factorization (g, a) = embed_g(g) embed_a(a) failed".into(),
                ));
            }
        }
    }

    Ok(SemidirectProduct { module: m.clone(), group, embed_g, embed_a })
}

impl SemidirectProduct {
    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn embed_g(&self) -> &GroupHom {
        &self.embed_g
    }

    pub fn embed_a(&self) -> &GroupHom {
        &self.embed_a
    }

    /// Decomposes an index of E into its (g, a) pair.
    pub fn parts(&self, x: usize) -> (usize, usize) {
        let na = self.module.coeff().order();
        (x / na, x % na)
    }

    pub fn index(&self, g: usize, a: usize) -> usize {
        g * self.module.coeff().order() + a
    }

    fn is_complement(&self, members: &[usize]) -> Result<Subgroup> {
        let sub = Subgroup::from_members(&self.group, members)?;
        let ng = self.module.group().order();
        let na = self.module.coeff().order();
        if sub.order() != ng {
            return Err(Error::NotAComplement(format!(
                "subgroup has order {}, expected {ng}",
                sub.order()
            )));
        }
        // embed_a(A) occupies exactly the indices below |A|
        if members.iter().any(|&x| x != 0 && x < na) {
            return Err(Error::NotAComplement(
                "subgroup meets embed_a(A) beyond the identity".into(),
            ));
        }
        Ok(sub)
    }
}

/// All complements of embed_a(A) in E, found by closing every generator set
/// of at most three elements. Independent of the derivation machinery.
pub fn complements_bruteforce(sp: &SemidirectProduct) -> Result<Vec<Vec<usize>>> {
    let ng = sp.module.group().order();
    let na = sp.module.coeff().order();
    if ng > BRUTEFORCE_GROUP_CAP {
        return Err(Error::SizeLimitExceeded(format!(
            "brute-force complement search capped at acting groups of order {BRUTEFORCE_GROUP_CAP}, got {ng}"
        )));
    }
    let e = &sp.group;

    // a complement element other than 1 cannot lie in embed_a(A), and its
    // order must divide |G|
    let candidates: Vec<usize> = e
        .elements()
        .filter(|&x| x >= na && ng % e.element_order(x) == 0)
        .collect();

    // closure with early abort once the subgroup grows past |G|
    let close = |seeds: &[usize]| -> Option<Vec<usize>> {
        let mut members: BTreeSet<usize> = BTreeSet::new();
        members.insert(0);
        let mut frontier: Vec<usize> = vec![0];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                for y in [e.mul(x, s), e.mul(s, x)] {
                    if members.insert(y) {
                        if members.len() > ng {
                            return None;
                        }
                        frontier.push(y);
                    }
                }
            }
        }
        Some(members.into_iter().collect())
    };

    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut consider = |seeds: &[usize]| {
        if let Some(members) = close(seeds) {
            if members.len() == ng && members.iter().all(|&x| x == 0 || x >= na) {
                found.insert(members);
            }
        }
    };

    consider(&[]);
    for (i, &x) in candidates.iter().enumerate() {
        consider(&[x]);
        for (j, &y) in candidates.iter().enumerate().skip(i + 1) {
            consider(&[x, y]);
            for &z in candidates.iter().skip(j + 1) {
                consider(&[x, y, z]);
            }
        }
    }

    Ok(found.into_iter().collect())
}

/// alpha_X(g) = n where g^-1 factors as x * embed_a(n) with x in X.
pub fn derivation_from_complement(sp: &SemidirectProduct, members: &[usize]) -> Result<Derivation> {
    sp.is_complement(members)?;
    let g = sp.module.group();
    let a = sp.module.coeff();
    let values = g
        .elements()
        .map(|gg| {
            let want = g.inv(gg);
            let mut hits = members.iter().filter(|&&x| sp.parts(x).0 == want);
            let x = *hits.next().ok_or_else(|| {
                Error::NotAComplement(format!("no element of X projects to {want}"))
            })?;
            if hits.next().is_some() {
                return Err(Error::NotAComplement(format!(
                    "two elements of X project to {want}"
                )));
            }
            // x = (g^-1, u) and g^-1 = x * embed_a(u^-1)
            Ok(a.inv(sp.parts(x).1))
        })
        .collect::<Result<Vec<usize>>>()?;
    Derivation::new(&sp.module, values)
}

/// X_alpha = { embed_a(alpha(g)) * embed_g(g) : g in G }, verified to be a
/// complement.
pub fn complement_from_derivation(sp: &SemidirectProduct, d: &Derivation) -> Result<Vec<usize>> {
    if d.module() != &sp.module {
        return Err(Error::ModuleMismatch);
    }
    let e = &sp.group;
    let mut members: Vec<usize> = sp
        .module
        .group()
        .elements()
        .map(|g| e.mul(sp.embed_a.apply(d.apply(g)), sp.embed_g.apply(g)))
        .collect();
    members.sort_unstable();
    sp.is_complement(&members)?;
    Ok(members)
}

/// The partition of all complements into E-conjugacy classes, together with
/// the induced map from H^1(G, A) and the theorem-check verdicts.
#[derive(Clone, Debug)]
pub struct ComplementClasses {
    /// Sorted member lists, lexicographically ordered.
    pub complements: Vec<Vec<usize>>,
    /// Indices into `complements`, one sorted vector per conjugacy class.
    pub classes: Vec<Vec<usize>>,
    /// From the pointed set H^1(G, A) to the classes (keys are the least
    /// member list of each class; basepoint is the class of embed_g(G)).
    pub h1_to_class: PointedMap,
    pub surjective: bool,
    pub injective: bool,
    /// Whether all complements are conjugate; only reported when |H^1| = 1.
    pub single_class_when_h1_trivial: Option<bool>,
}

pub fn complement_classes(sp: &SemidirectProduct, h: &H1) -> Result<ComplementClasses> {
    let complements = complements_bruteforce(sp)?;
    let e = &sp.group;

    let position = |members: &[usize]| -> Result<usize> {
        complements
            .binary_search_by(|c| c.as_slice().cmp(members))
            .map_err(|_| Error::NotAComplement("conjugate of a complement not found".into()))
    };

    // partition under conjugation by every element of E
    let mut class_of = vec![usize::MAX; complements.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..complements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut orbit = vec![start];
        class_of[start] = id;
        let mut head = 0;
        while head < orbit.len() {
            let current = &complements[orbit[head]];
            head += 1;
            for t in e.elements() {
                let mut conj: Vec<usize> = current.iter().map(|&x| e.conj(t, x)).collect();
                conj.sort_unstable();
                let p = position(&conj)?;
                if class_of[p] == usize::MAX {
                    class_of[p] = id;
                    orbit.push(p);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }

    // [alpha] -> class of X_alpha, checked over every class member
    let mut map = Vec::with_capacity(h.len());
    for class in h.classes() {
        let mut target: Option<usize> = None;
        for member in class.members() {
            let d = Derivation::new(&sp.module, member.clone())?;
            let x = complement_from_derivation(sp, &d)?;
            let t = class_of[position(&x)?];
            match target {
                None => target = Some(t),
                Some(prev) if prev != t => {
                    return Err(Error::NotAComplement(
                        "cohomologous derivations yield non-conjugate complements".into(),
                    ))
                }
                _ => {}
            }
        }
        map.push(target.unwrap());
    }

    let trivial_complement =
        complement_from_derivation(sp, &Derivation::trivial(&sp.module))?;
    let basepoint = class_of[position(&trivial_complement)?];
    let class_set = PointedSet::new(
        classes.iter().map(|c| complements[c[0]].clone()).collect(),
        basepoint,
    );
    let h1_to_class = PointedMap::new(h.pointed_set(), class_set, map);

    let surjective = h1_to_class.image().len() == classes.len();
    let injective = h1_to_class.is_injective();
    let single_class_when_h1_trivial = (h.len() == 1).then(|| classes.len() == 1);

    Ok(ComplementClasses {
        complements,
        classes,
        h1_to_class,
        surjective,
        injective,
        single_class_when_h1_trivial,
    })
}
