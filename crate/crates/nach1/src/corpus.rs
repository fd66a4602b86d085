//! Built-in groups, modules, and exact-sequence instances used by the CLI
//! corpus runner and by the test suites.

use std::sync::Arc;

use crate::gmodule::{GModule, GModuleHom};
use crate::group::{quotient_group, FiniteGroup, GroupHom, Subgroup};
use crate::sequences::ShortExactSequence;
use crate::{Error, Result};

pub fn trivial_group() -> Arc<FiniteGroup> {
    FiniteGroup::from_table(&[vec![0]], Some("C1")).unwrap()
}

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(&table, Some(&format!("C{n}"))).unwrap()
}

pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
    let na = a.order();
    let nb = b.order();
    let idx = |x: usize, y: usize| x * nb + y;
    let mut table = vec![vec![0usize; na * nb]; na * nb];
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                for y2 in 0..nb {
                    table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    let label = match (a.label(), b.label()) {
        (Some(la), Some(lb)) => Some(format!("{la} x {lb}")),
        _ => None,
    };
    FiniteGroup::from_table(&table, label.as_deref()).unwrap()
}

pub fn klein() -> Arc<FiniteGroup> {
    let table = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    FiniteGroup::from_table(&table, Some("V4")).unwrap()
}

pub fn symmetric3() -> Arc<FiniteGroup> {
    FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], Some("S3"), 6).unwrap()
}

pub fn symmetric4() -> Arc<FiniteGroup> {
    FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], Some("S4"), 24)
        .unwrap()
}

pub fn dihedral4() -> Arc<FiniteGroup> {
    FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]], Some("D4"), 8)
        .unwrap()
}

pub fn quaternion8() -> Arc<FiniteGroup> {
    // index = sign * 4 + base, with bases 1, i, j, k
    let base_mul = |b1: usize, b2: usize| -> (usize, usize) {
        match (b1, b2) {
            (0, b) => (b, 0),
            (b, 0) => (b, 0),
            (x, y) if x == y => (0, 1),
            (1, 2) => (3, 0),
            (2, 3) => (1, 0),
            (3, 1) => (2, 0),
            (2, 1) => (3, 1),
            (3, 2) => (1, 1),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0usize; 8]; 8];
    for s1 in 0..2 {
        for b1 in 0..4 {
            for s2 in 0..2 {
                for b2 in 0..4 {
                    let (b, s) = base_mul(b1, b2);
                    table[s1 * 4 + b1][s2 * 4 + b2] = ((s1 + s2 + s) % 2) * 4 + b;
                }
            }
        }
    }
    FiniteGroup::from_table(&table, Some("Q8")).unwrap()
}

/// Every subgroup generated by at most `max_gens` elements, sorted by
/// (order, member list). Complete for every group in this corpus.
pub fn all_subgroups(g: &Arc<FiniteGroup>, max_gens: usize) -> Vec<Subgroup> {
    let n = g.order();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    seen.insert(vec![0]);

    fn recurse(
        g: &Arc<FiniteGroup>,
        seeds: &mut Vec<usize>,
        start: usize,
        remaining: usize,
        seen: &mut std::collections::BTreeSet<Vec<usize>>,
    ) {
        if remaining == 0 {
            return;
        }
        for x in start..g.order() {
            seeds.push(x);
            let sub = Subgroup::generated(g, seeds).unwrap();
            seen.insert(sub.members().to_vec());
            recurse(g, seeds, x + 1, remaining - 1, seen);
            seeds.pop();
        }
    }
    let mut seeds = Vec::new();
    recurse(g, &mut seeds, 0, max_gens.min(n), &mut seen);

    let mut out: Vec<Subgroup> = seen
        .into_iter()
        .map(|members| Subgroup::from_members(g, &members).unwrap())
        .collect();
    out.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    out
}

/// G acting on abelian A through inversion: elements of the least index-2
/// subgroup of G act trivially, all others send a to a^-1.
pub fn inversion_module(g: &Arc<FiniteGroup>, a: &Arc<FiniteGroup>) -> Result<GModule> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order();
    let kernel = all_subgroups(g, 3)
        .into_iter()
        .find(|s| s.order() * 2 == n)
        .ok_or_else(|| {
            Error::NotAnAction(format!(
                "{} has no index-2 subgroup, so no inversion action exists",
                g.label().unwrap_or("group")
            ))
        })?;
    let mut act = Vec::with_capacity(n * a.order());
    for x in g.elements() {
        for y in a.elements() {
            act.push(if kernel.contains(x) { y } else { a.inv(y) });
        }
    }
    GModule::new(g, a, act)
}

/// The short exact sequence 1 -> A' -> B -> B/A' -> 1 of G-modules induced
/// by a G-stable normal subgroup A' of the coefficient group of `m_b`.
pub fn submodule_sequence(m_b: &GModule, a_sub: &Subgroup) -> Result<ShortExactSequence> {
    let g = m_b.group();
    let b = m_b.coeff();
    if a_sub.parent() != b {
        return Err(Error::NotExact("subgroup does not live in the middle coefficients".into()));
    }
    if !a_sub.is_normal() {
        return Err(Error::NotNormalInB);
    }
    let (a_group, members) = a_sub.as_group()?;
    let pos = |x: usize| members.binary_search(&x);

    // restricted action on A'
    let mut act_a = Vec::with_capacity(g.order() * a_group.order());
    for gg in g.elements() {
        for &m in &members {
            let image = m_b.act(gg, m);
            let p = pos(image).map_err(|_| {
                Error::NotAnAction(format!("subgroup is not stable: act({gg}, {m}) escapes"))
            })?;
            act_a.push(p);
        }
    }
    let m_a = GModule::new(g, &a_group, act_a)?;
    let iota = GModuleHom::new(&m_a, m_b, GroupHom::new(&a_group, b, members)?)?;

    // quotient action on B/A', consistency checked over every representative
    let (c_group, proj) = quotient_group(b, a_sub)?;
    let mut act_c = vec![usize::MAX; g.order() * c_group.order()];
    for gg in g.elements() {
        for x in b.elements() {
            let q = proj.apply(x);
            let val = proj.apply(m_b.act(gg, x));
            let slot = &mut act_c[gg * c_group.order() + q];
            if *slot == usize::MAX {
                *slot = val;
            } else if *slot != val {
                return Err(Error::IllDefinedAction(format!(
                    "representatives of coset {q} disagree under act({gg}, -)"
                )));
            }
        }
    }
    let m_c = GModule::new(g, &c_group, act_c)?;
    let pi = GModuleHom::new(m_b, &m_c, proj)?;

    ShortExactSequence::new(iota, pi)
}

fn abelian_middle_groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        cyclic(2),
        cyclic(3),
        cyclic(4),
        cyclic(6),
        cyclic(8),
        klein(),
        direct_product(&cyclic(2), &cyclic(4)),
    ]
}

fn nonabelian_middle_groups() -> Vec<Arc<FiniteGroup>> {
    vec![symmetric3(), dihedral4(), quaternion8()]
}

/// Every validated short exact sequence in the corpus (middle coefficient
/// group of order at most 16).
pub fn sequence_instances() -> Vec<ShortExactSequence> {
    let mut modules: Vec<GModule> = Vec::new();
    for b in abelian_middle_groups() {
        modules.push(GModule::trivial(&trivial_group(), &b));
        modules.push(GModule::trivial(&cyclic(2), &b));
        modules.push(inversion_module(&cyclic(2), &b).unwrap());
    }
    for b in nonabelian_middle_groups() {
        modules.push(GModule::trivial(&trivial_group(), &b));
        modules.push(GModule::conjugation(&b));
    }

    let mut out = Vec::new();
    for m in &modules {
        for sub in all_subgroups(m.coeff(), 3) {
            if let Ok(ses) = submodule_sequence(m, &sub) {
                out.push(ses);
            }
        }
    }
    out
}

/// Corpus modules for the semidirect-product suite (|G| <= 8, |A| <= 9).
pub fn semidirect_instances() -> Vec<GModule> {
    let mut out = Vec::new();
    let acting: Vec<Arc<FiniteGroup>> =
        vec![cyclic(2), cyclic(3), cyclic(4), klein(), cyclic(6), symmetric3(), dihedral4()];
    let coeffs: Vec<Arc<FiniteGroup>> = vec![
        cyclic(2),
        cyclic(3),
        cyclic(4),
        klein(),
        cyclic(6),
        cyclic(9),
        direct_product(&cyclic(3), &cyclic(3)),
        symmetric3(),
    ];
    for g in &acting {
        for a in &coeffs {
            if g.order() * a.order() > crate::semidirect::SEMIDIRECT_ORDER_CAP {
                continue;
            }
            out.push(GModule::trivial(g, a));
        }
    }
    for g in [cyclic(2), cyclic(4), symmetric3()] {
        for a in [cyclic(3), cyclic(4), cyclic(6), cyclic(9)] {
            out.push(inversion_module(&g, &a).unwrap());
        }
    }
    out.push(GModule::conjugation(&symmetric3()));
    out.push(GModule::conjugation(&dihedral4()));
    out.push(GModule::conjugation(&quaternion8()));
    out
}

/// (module, normal subgroup of G) pairs for the inflation-restriction suite.
pub fn infres_instances() -> Vec<(GModule, Subgroup)> {
    let mut modules = vec![
        GModule::trivial(&cyclic(4), &cyclic(2)),
        GModule::trivial(&cyclic(4), &cyclic(3)),
        GModule::trivial(&klein(), &cyclic(2)),
        GModule::trivial(&symmetric3(), &cyclic(2)),
        GModule::trivial(&symmetric3(), &cyclic(3)),
        GModule::trivial(&dihedral4(), &cyclic(2)),
        GModule::trivial(&cyclic(6), &cyclic(6)),
        inversion_module(&cyclic(4), &cyclic(3)).unwrap(),
        inversion_module(&cyclic(4), &cyclic(4)).unwrap(),
        inversion_module(&klein(), &cyclic(3)).unwrap(),
        GModule::conjugation(&symmetric3()),
        GModule::conjugation(&dihedral4()),
        GModule::conjugation(&quaternion8()),
    ];
    let mut out = Vec::new();
    for m in modules.drain(..) {
        for n in all_subgroups(m.group(), 3) {
            if n.is_normal() {
                out.push((m.clone(), n));
            }
        }
    }
    out
}

/// Every corpus module with abelian coefficients, for the agreement suite
/// between the derivation engine and the cochain complex.
pub fn abelian_module_instances() -> Vec<GModule> {
    let mut out: Vec<GModule> = semidirect_instances()
        .into_iter()
        .filter(|m| m.coeff().is_abelian())
        .collect();
    out.push(GModule::trivial(&symmetric4(), &cyclic(2)));
    out.push(GModule::trivial(&quaternion8(), &cyclic(2)));
    out
}

/// 1 -> C2 -> C4 -> C2 -> 1 with C2 inverting C4 (delta^0 is nontrivial).
pub fn c4_inversion_sequence() -> ShortExactSequence {
    let m = inversion_module(&cyclic(2), &cyclic(4)).unwrap();
    let sub = Subgroup::generated(m.coeff(), &[2]).unwrap();
    submodule_sequence(&m, &sub).unwrap()
}

/// 1 -> C2 -> C4 -> C2 -> 1 with trivial C2-action everywhere (central;
/// delta^1 of the identity-homomorphism class is not a coboundary).
pub fn c4_central_sequence() -> ShortExactSequence {
    let m = GModule::trivial(&cyclic(2), &cyclic(4));
    let sub = Subgroup::generated(m.coeff(), &[2]).unwrap();
    submodule_sequence(&m, &sub).unwrap()
}
