//! G-modules: left actions of a finite group G on a finite group A by
//! automorphisms, stored as full |G| x |A| tables so every invariant is
//! checked exhaustively at construction.

use std::sync::Arc;

use crate::group::{quotient_group, FiniteGroup, GroupHom, Subgroup};
use crate::{Error, Result};

/// A finite group A with a validated left G-action by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    coeff: Arc<FiniteGroup>,
    act: Vec<usize>,
}

impl GModule {
    /// Validates the three action axioms: identity acts trivially, each
    /// act(g, .) is an automorphism of A, and act(g1 g2, .) = act(g1, act(g2, .)).
    pub fn new(
        group: &Arc<FiniteGroup>,
        coeff: &Arc<FiniteGroup>,
        act: Vec<usize>,
    ) -> Result<Self> {
        let ng = group.order();
        let na = coeff.order();
        if act.len() != ng * na {
            return Err(Error::NotAnAction(format!(
                "action table has {} entries, expected {}",
                act.len(),
                ng * na
            )));
        }
        for &v in &act {
            if v >= na {
                return Err(Error::IndexOutOfRange { index: v, order: na });
            }
        }
        let at = |g: usize, a: usize| act[g * na + a];
        for a in 0..na {
            if at(0, a) != a {
                return Err(Error::NotAnAction(format!(
                    "identity does not act trivially on element {a}"
                )));
            }
        }
        for g in 0..ng {
            let mut seen = vec![false; na];
            for a in 0..na {
                if std::mem::replace(&mut seen[at(g, a)], true) {
                    return Err(Error::NotAnAction(format!(
                        "act({g}, .) is not a bijection (collision at {a})"
                    )));
                }
            }
            for a in 0..na {
                for b in 0..na {
                    if at(g, coeff.mul(a, b)) != coeff.mul(at(g, a), at(g, b)) {
                        return Err(Error::NotAnAction(format!(
                            "act({g}, .) is not a homomorphism at pair ({a},{b})"
                        )));
                    }
                }
            }
        }
        for g1 in 0..ng {
            for g2 in 0..ng {
                let prod = group.mul(g1, g2);
                for a in 0..na {
                    if at(prod, a) != at(g1, at(g2, a)) {
                        return Err(Error::NotAnAction(format!(
                            "not a left action at ({g1},{g2},{a})"
                        )));
                    }
                }
            }
        }
        Ok(Self { group: Arc::clone(group), coeff: Arc::clone(coeff), act })
    }

    pub fn trivial(group: &Arc<FiniteGroup>, coeff: &Arc<FiniteGroup>) -> Self {
        let na = coeff.order();
        let act = (0..group.order()).flat_map(|_| 0..na).collect();
        Self { group: Arc::clone(group), coeff: Arc::clone(coeff), act }
    }

    /// G acting on itself by conjugation.
    pub fn conjugation(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let mut act = vec![0usize; n * n];
        for g in 0..n {
            for a in 0..n {
                act[g * n + a] = group.conj(g, a);
            }
        }
        Self { group: Arc::clone(group), coeff: Arc::clone(group), act }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self) -> &Arc<FiniteGroup> {
        &self.coeff
    }

    /// ᵍa
    #[inline]
    pub fn act(&self, g: usize, a: usize) -> usize {
        self.act[g * self.coeff.order() + a]
    }

    pub fn act_table(&self) -> &[usize] {
        &self.act
    }

    /// {a in A : ᵍa = a for all g in S}. With S = G this is H^0(G, A).
    pub fn fixed_points(&self, s: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self
            .coeff
            .elements()
            .filter(|&a| s.members().iter().all(|&g| self.act(g, a) == a))
            .collect();
        // fixed points of automorphisms always form a subgroup; the
        // constructor re-verifies closure
        Subgroup::from_members(&self.coeff, &members)
            .expect("fixed points are closed under mul and inv")
    }

    /// Same coefficients, action restricted to a subgroup of G re-indexed
    /// as its own group.
    pub fn restrict(&self, n: &Subgroup) -> Result<GModule> {
        let (h, members) = n.as_group()?;
        let na = self.coeff.order();
        let mut act = Vec::with_capacity(h.order() * na);
        for &g in &members {
            for a in 0..na {
                act.push(self.act(g, a));
            }
        }
        GModule::new(&h, &self.coeff, act)
    }

    /// A^N as a G/N-module: (gN) . a = ᵍa. Well-definedness across coset
    /// representatives is verified exhaustively. Returns the module, the
    /// quotient projection, and the member list of A^N inside A.
    pub fn quotient_acting(&self, n: &Subgroup) -> Result<(GModule, GroupHom, Vec<usize>)> {
        let (quotient, proj) = quotient_group(&self.group, n)?;
        let fixed = self.fixed_points(n);
        let (an, an_members) = fixed.as_group()?;
        let pos = |a: usize| an_members.binary_search(&a).ok();

        let nq = quotient.order();
        let mut act = vec![usize::MAX; nq * an.order()];
        for g in self.group.elements() {
            let q = proj.apply(g);
            for (i, &a) in an_members.iter().enumerate() {
                let image = self.act(g, a);
                let image_pos = pos(image).ok_or_else(|| {
                    Error::IllDefinedAction(format!(
                        "coset representative {g} moves fixed point {a} outside A^N"
                    ))
                })?;
                let slot = &mut act[q * an.order() + i];
                if *slot == usize::MAX {
                    *slot = image_pos;
                } else if *slot != image_pos {
                    return Err(Error::IllDefinedAction(format!(
                        "representatives of coset {q} disagree on fixed point {a}"
                    )));
                }
            }
        }
        let module = GModule::new(&quotient, &an, act)?;
        Ok((module, proj, an_members))
    }
}

/// An equivariant homomorphism between two modules over the same G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModuleHom {
    dom: GModule,
    cod: GModule,
    hom: GroupHom,
}

impl GModuleHom {
    pub fn new(dom: &GModule, cod: &GModule, hom: GroupHom) -> Result<Self> {
        if dom.group() != cod.group() {
            return Err(Error::NotEquivariant("modules have different acting groups".into()));
        }
        if hom.dom() != dom.coeff() || hom.cod() != cod.coeff() {
            return Err(Error::NotEquivariant(
                "underlying homomorphism does not match module coefficients".into(),
            ));
        }
        for g in dom.group().elements() {
            for a in dom.coeff().elements() {
                if hom.apply(dom.act(g, a)) != cod.act(g, hom.apply(a)) {
                    return Err(Error::NotEquivariant(format!(
                        "f(act({g},{a})) != act({g}, f({a}))"
                    )));
                }
            }
        }
        Ok(Self { dom: dom.clone(), cod: cod.clone(), hom })
    }

    pub fn dom(&self) -> &GModule {
        &self.dom
    }

    pub fn cod(&self) -> &GModule {
        &self.cod
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.hom.apply(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn trivial_module_is_valid() {
        let g = corpus::symmetric3();
        let a = corpus::cyclic(5);
        let m = GModule::trivial(&g, &a);
        GModule::new(&g, &a, m.act_table().to_vec()).unwrap();
    }

    #[test]
    fn inversion_is_an_action() {
        let m = corpus::inversion_module(&corpus::cyclic(2), &corpus::cyclic(3)).unwrap();
        assert_eq!(m.act(1, 1), 2);
        assert_eq!(m.act(1, 2), 1);
    }

    #[test]
    fn translation_is_not_an_action() {
        let g = corpus::cyclic(2);
        let a = corpus::cyclic(4);
        // "acting" by a -> a+1: shifts the identity, not an automorphism
        let mut act: Vec<usize> = (0..4).collect();
        act.extend((0..4).map(|x: usize| (x + 1) % 4));
        match GModule::new(&g, &a, act) {
            Err(Error::NotAnAction(_)) => {}
            other => panic!("expected NotAnAction, got {other:?}"),
        }
    }

    #[test]
    fn conjugation_module() {
        let c6 = corpus::cyclic(6);
        assert_eq!(GModule::conjugation(&c6), GModule::trivial(&c6, &c6));

        let s3 = corpus::symmetric3();
        let m = GModule::conjugation(&s3);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        // a transposition inverts a 3-cycle (oracle: multiply permutations)
        assert_eq!(m.act(t, c), s3.inv(c));
        let fixed = m.fixed_points(&Subgroup::full(&s3));
        assert_eq!(fixed.members(), crate::group::center(&s3).members());
    }

    #[test]
    fn fixed_points_of_inversion() {
        let m3 = corpus::inversion_module(&corpus::cyclic(2), &corpus::cyclic(3)).unwrap();
        let all = Subgroup::full(m3.group());
        assert_eq!(m3.fixed_points(&all).members(), &[0]);

        let m4 = corpus::inversion_module(&corpus::cyclic(2), &corpus::cyclic(4)).unwrap();
        let all = Subgroup::full(m4.group());
        assert_eq!(m4.fixed_points(&all).members(), &[0, 2]);
    }

    #[test]
    fn fixed_points_nest() {
        let m = GModule::conjugation(&corpus::symmetric3());
        let g = m.group().clone();
        for x in g.elements() {
            let s1 = Subgroup::generated(&g, &[x]).unwrap();
            let s2 = Subgroup::full(&g);
            let f2 = m.fixed_points(&s2);
            let f1 = m.fixed_points(&s1);
            assert!(f2.members().iter().all(|&a| f1.contains(a)));
        }
    }

    #[test]
    fn restriction() {
        // C4 inverting C3, restricted to {0,2}: 2 acts as inversion^2 = id
        let c4 = corpus::cyclic(4);
        let m = corpus::inversion_module(&c4, &corpus::cyclic(3)).unwrap();
        let n = Subgroup::generated(&c4, &[2]).unwrap();
        let restricted = m.restrict(&n).unwrap();
        assert_eq!(restricted, GModule::trivial(restricted.group(), m.coeff()));

        let trivial = m.restrict(&Subgroup::trivial(&c4)).unwrap();
        assert_eq!(trivial.group().order(), 1);

        let full = m.restrict(&Subgroup::full(&c4)).unwrap();
        assert_eq!(full, m);
    }

    #[test]
    fn quotient_acting() {
        // C4 inverting C3 over N = {0,2}: A^N = C3, G/N = C2 acts by inversion
        let c4 = corpus::cyclic(4);
        let m = corpus::inversion_module(&c4, &corpus::cyclic(3)).unwrap();
        let n = Subgroup::generated(&c4, &[2]).unwrap();
        let (q, _, an_members) = m.quotient_acting(&n).unwrap();
        assert_eq!(an_members.len(), 3);
        assert_eq!(q.group().order(), 2);
        assert_eq!(q.act(1, 1), 2);

        // N = G: trivial group acting on A^G
        let (qg, _, fixed) = m.quotient_acting(&Subgroup::full(&c4)).unwrap();
        assert_eq!(qg.group().order(), 1);
        assert_eq!(fixed, vec![0]);

        // N = 1: the module itself
        let (q1, _, all) = m.quotient_acting(&Subgroup::trivial(&c4)).unwrap();
        assert_eq!(q1, m);
        assert_eq!(all, vec![0, 1, 2]);
    }

    #[test]
    fn quotient_then_inflate_agrees_on_fixed_points() {
        let c4 = corpus::cyclic(4);
        let m = corpus::inversion_module(&c4, &corpus::cyclic(4)).unwrap();
        let n = Subgroup::generated(&c4, &[2]).unwrap();
        let (q, proj, an_members) = m.quotient_acting(&n).unwrap();
        for g in c4.elements() {
            for (i, &a) in an_members.iter().enumerate() {
                assert_eq!(an_members[q.act(proj.apply(g), i)], m.act(g, a));
            }
        }
    }

    #[test]
    fn equivariance_checked() {
        let c2 = corpus::cyclic(2);
        let c4 = corpus::cyclic(4);
        let m4 = corpus::inversion_module(&c2, &c4).unwrap();
        let m2 = GModule::trivial(&c2, &c2);
        // reduction mod 2 intertwines inversion with the trivial action
        let red = GroupHom::new(&c4, &c2, vec![0, 1, 0, 1]).unwrap();
        GModuleHom::new(&m4, &m2, red).unwrap();

        // the identity C4 -> C4 does not intertwine inversion with trivial
        let t4 = GModule::trivial(&c2, &c4);
        let id = GroupHom::identity(&c4);
        assert!(matches!(GModuleHom::new(&m4, &t4, id), Err(Error::NotEquivariant(_))));
    }
}
