//! Derivations, H^0 and H^1 as pointed sets, the cochain-complex H^n for
//! abelian coefficients, and the connecting maps delta^0 and delta^1.

use std::collections::HashSet;

use crate::abelian::{abelian_structure, subquotient, IntMatrixHom, Mat, Structure};
use crate::gmodule::{GModule, GModuleHom};
use crate::group::Subgroup;
use crate::sequences::{Section, ShortExactSequence};
use crate::{Error, Result};

/// Default cap on generator-assignment enumeration (|A|^k).
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

/// Default cap on the rank of a cochain group entering Smith normal form.
pub const DEFAULT_RANK_CAP: usize = 20_000;

/// A map G -> A with values(gh) = values(g) * ᵍvalues(h).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    module: GModule,
    values: Vec<usize>,
}

impl Derivation {
    pub fn new(module: &GModule, values: Vec<usize>) -> Result<Self> {
        let g = module.group();
        let a = module.coeff();
        if values.len() != g.order() {
            return Err(Error::NotADerivation(format!(
                "value table has length {}, expected {}",
                values.len(),
                g.order()
            )));
        }
        for &v in &values {
            if v >= a.order() {
                return Err(Error::IndexOutOfRange { index: v, order: a.order() });
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                let lhs = values[g.mul(x, y)];
                let rhs = a.mul(values[x], module.act(x, values[y]));
                if lhs != rhs {
                    return Err(Error::NotADerivation(format!(
                        "cocycle law fails at pair ({x},{y})"
                    )));
                }
            }
        }
        Ok(Self { module: module.clone(), values })
    }

    /// The basepoint derivation g -> 1.
    pub fn trivial(module: &GModule) -> Self {
        Self { module: module.clone(), values: vec![0; module.group().order()] }
    }

    /// g -> a^-1 * ᵍa (always a derivation).
    pub fn principal(module: &GModule, a: usize) -> Self {
        let g = module.group();
        let coeff = module.coeff();
        let values = g
            .elements()
            .map(|x| coeff.mul(coeff.inv(a), module.act(x, a)))
            .collect();
        Self { module: module.clone(), values }
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.values[g]
    }
}

/// Least a with beta(g) = a^-1 * alpha(g) * ᵍa for all g, if any.
pub fn cohomologous(alpha: &Derivation, beta: &Derivation) -> Result<Option<usize>> {
    if alpha.module != beta.module {
        return Err(Error::ModuleMismatch);
    }
    let m = &alpha.module;
    let g = m.group();
    let a = m.coeff();
    Ok(a.elements().find(|&w| {
        g.elements().all(|x| {
            beta.values[x] == a.mul(a.mul(a.inv(w), alpha.values[x]), m.act(x, w))
        })
    }))
}

/// H^0(G, A) = A^G, as a subgroup of A.
pub fn h0(module: &GModule) -> Subgroup {
    module.fixed_points(&Subgroup::full(module.group()))
}

/// All derivations G -> A, lexicographically ordered by value table.
///
/// A small generating set of G is chosen greedily; generator assignments
/// are enumerated and extended along a breadth-first spanning structure,
/// then the cocycle law is verified on the full table.
pub fn enumerate_derivations(module: &GModule, cap: u128) -> Result<Vec<Derivation>> {
    let g = module.group();
    let a = module.coeff();
    let n = g.order();
    let na = a.order();

    if n == 1 {
        return Ok(vec![Derivation::trivial(module)]);
    }

    // greedy generating set: least element outside the generated subgroup
    let mut gens: Vec<usize> = Vec::new();
    let mut span = Subgroup::trivial(g);
    while span.order() < n {
        let next = g.elements().find(|&x| !span.contains(x)).unwrap();
        gens.push(next);
        span = Subgroup::generated(g, &gens)?;
    }
    let k = gens.len();

    let total = (na as u128)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::SizeLimitExceeded("generator assignment count overflows".into()))?;
    if total > cap {
        return Err(Error::SizeLimitExceeded(format!(
            "{na}^{k} = {total} generator assignments exceed cap {cap}"
        )));
    }

    // breadth-first spanning structure: each non-identity element is
    // discovered once as parent * generator
    let mut parent = vec![usize::MAX; n]; // (parent, gen index) packed below
    let mut via_gen = vec![usize::MAX; n];
    let mut order_of_discovery = Vec::with_capacity(n);
    order_of_discovery.push(0);
    let mut discovered = vec![false; n];
    discovered[0] = true;
    let mut head = 0;
    while head < order_of_discovery.len() {
        let h = order_of_discovery[head];
        head += 1;
        for (gi, &s) in gens.iter().enumerate() {
            let x = g.mul(h, s);
            if !discovered[x] {
                discovered[x] = true;
                parent[x] = h;
                via_gen[x] = gi;
                order_of_discovery.push(x);
            }
        }
    }

    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut assignment = vec![0usize; k];
    loop {
        // extend the assignment along the spanning structure
        let mut values = vec![0usize; n];
        for &x in order_of_discovery.iter().skip(1) {
            let h = parent[x];
            let s_val = assignment[via_gen[x]];
            values[x] = a.mul(values[h], module.act(h, s_val));
        }
        let ok = (0..n).all(|x| {
            (0..n).all(|y| values[g.mul(x, y)] == a.mul(values[x], module.act(x, values[y])))
        });
        if ok {
            out.push(values);
        }

        // next assignment, lexicographic from the last digit
        let mut pos = k;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < na {
                break;
            }
            assignment[pos] = 0;
            if pos == 0 {
                break;
            }
        }
        if assignment.iter().all(|&v| v == 0) {
            break;
        }
    }

    out.sort_unstable();
    out.dedup();
    Ok(out
        .into_iter()
        .map(|values| Derivation { module: module.clone(), values })
        .collect())
}

/// One cohomology class of derivations. The representative is the
/// lexicographically least value table in the class.
#[derive(Clone, Debug)]
pub struct H1Class {
    representative: Derivation,
    members: Vec<Vec<usize>>,
}

impl H1Class {
    pub fn representative(&self) -> &Derivation {
        &self.representative
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn contains(&self, values: &[usize]) -> bool {
        self.members.binary_search_by(|m| m.as_slice().cmp(values)).is_ok()
    }
}

/// H^1(G, A) as a partition of all derivations, with the class of the
/// trivial derivation as basepoint.
#[derive(Clone, Debug)]
pub struct H1 {
    module: GModule,
    classes: Vec<H1Class>,
    basepoint: usize,
}

impl H1 {
    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn classes(&self) -> &[H1Class] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the trivial derivation always exists
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// Index of the class containing a derivation's value table.
    pub fn class_of(&self, values: &[usize]) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(values))
    }

    pub fn pointed_set(&self) -> PointedSet {
        PointedSet {
            keys: self.classes.iter().map(|c| c.representative.values.clone()).collect(),
            basepoint: self.basepoint,
        }
    }
}

pub fn h1(module: &GModule, cap: u128) -> Result<H1> {
    let derivations = enumerate_derivations(module, cap)?;
    let mut classes: Vec<(Derivation, Vec<Vec<usize>>)> = Vec::new();
    for d in derivations {
        let mut placed = false;
        for (rep, members) in classes.iter_mut() {
            if cohomologous(rep, &d)?.is_some() {
                members.push(d.values.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            // derivations arrive in lexicographic order, so the first
            // member of each class is its canonical representative
            classes.push((d.clone(), vec![d.values.clone()]));
        }
    }
    let trivial = vec![0usize; module.group().order()];
    let basepoint = classes
        .iter()
        .position(|(_, members)| members.binary_search(&trivial).is_ok() || members.contains(&trivial))
        .expect("the trivial derivation always exists");
    Ok(H1 {
        module: module.clone(),
        classes: classes
            .into_iter()
            .map(|(representative, members)| H1Class { representative, members })
            .collect(),
        basepoint,
    })
}

/// A finite pointed set with canonical keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSet {
    keys: Vec<Vec<usize>>,
    basepoint: usize,
}

impl PointedSet {
    pub fn new(keys: Vec<Vec<usize>>, basepoint: usize) -> Self {
        assert!(basepoint < keys.len());
        Self { keys, basepoint }
    }

    /// A subgroup viewed as a pointed set with basepoint 1 (keys are
    /// singleton element indices).
    pub fn from_subgroup(sub: &Subgroup) -> Self {
        let keys: Vec<Vec<usize>> = sub.members().iter().map(|&m| vec![m]).collect();
        let basepoint = sub.members().iter().position(|&m| m == 0).unwrap();
        Self { keys, basepoint }
    }

    pub fn keys(&self) -> &[Vec<usize>] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn index_of(&self, key: &[usize]) -> Option<usize> {
        self.keys.iter().position(|k| k == key)
    }
}

/// A basepoint-preserving map of pointed sets.
#[derive(Clone, Debug)]
pub struct PointedMap {
    dom: PointedSet,
    cod: PointedSet,
    map: Vec<usize>,
}

impl PointedMap {
    pub fn new(dom: PointedSet, cod: PointedSet, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), dom.len());
        assert!(map.iter().all(|&i| i < cod.len()));
        assert_eq!(map[dom.basepoint], cod.basepoint, "map must preserve the basepoint");
        Self { dom, cod, map }
    }

    pub fn dom(&self) -> &PointedSet {
        &self.dom
    }

    pub fn cod(&self) -> &PointedSet {
        &self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Indices in the domain that hit the codomain basepoint.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.dom.len()).filter(|&i| self.map[i] == self.cod.basepoint).collect()
    }

    /// Sorted, deduplicated image indices.
    pub fn image(&self) -> Vec<usize> {
        let set: std::collections::BTreeSet<usize> = self.map.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<usize> = self.map.iter().copied().collect();
        set.len() == self.map.len()
    }

    /// self after other.
    pub fn compose(&self, other: &PointedMap) -> PointedMap {
        assert_eq!(other.cod, self.dom);
        let map = other.map.iter().map(|&i| self.map[i]).collect();
        PointedMap::new(other.dom.clone(), self.cod.clone(), map)
    }
}

/// f restricted to fixed points: H^0(G, dom) -> H^0(G, cod).
pub fn induced_h0(f: &GModuleHom) -> PointedMap {
    let dom_fixed = h0(f.dom());
    let cod_fixed = h0(f.cod());
    let dom_set = PointedSet::from_subgroup(&dom_fixed);
    let cod_set = PointedSet::from_subgroup(&cod_fixed);
    let map = dom_fixed
        .members()
        .iter()
        .map(|&a| {
            cod_set
                .index_of(&[f.apply(a)])
                .expect("equivariant image of a fixed point is fixed")
        })
        .collect();
    PointedMap::new(dom_set, cod_set, map)
}

/// [alpha] -> [f . alpha]: H^1(G, dom) -> H^1(G, cod). Well-definedness is
/// re-verified: every member of a class must land in the same target class.
pub fn induced_h1(f: &GModuleHom, dom_h1: &H1, cod_h1: &H1) -> Result<PointedMap> {
    let mut map = Vec::with_capacity(dom_h1.len());
    for class in dom_h1.classes() {
        let mut target: Option<usize> = None;
        for member in class.members() {
            let composed: Vec<usize> = member.iter().map(|&a| f.apply(a)).collect();
            let t = cod_h1.class_of(&composed).ok_or_else(|| {
                Error::NotADerivation("composite of a derivation is not a derivation".into())
            })?;
            match target {
                None => target = Some(t),
                Some(prev) if prev != t => {
                    return Err(Error::NotEquivariant(
                        "induced map on H^1 is not well defined".into(),
                    ))
                }
                _ => {}
            }
        }
        map.push(target.unwrap());
    }
    Ok(PointedMap::new(dom_h1.pointed_set(), cod_h1.pointed_set(), map))
}

/// An n-cochain: a total map G^n -> A (degree 0 is a single element).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<usize>,
}

impl Cochain {
    pub fn len_for(group_order: usize, degree: usize) -> usize {
        group_order.pow(degree as u32)
    }

    pub fn zero(group_order: usize, degree: usize) -> Self {
        Self { degree, values: vec![0; Self::len_for(group_order, degree)] }
    }
}

/// Decodes a tuple index into (g_1, ..., g_n), g_1 most significant.
pub fn decode_tuple(index: usize, n: usize, group_order: usize) -> Vec<usize> {
    let mut t = vec![0usize; n];
    let mut rem = index;
    for i in (0..n).rev() {
        t[i] = rem % group_order;
        rem /= group_order;
    }
    t
}

pub fn encode_tuple(t: &[usize], group_order: usize) -> usize {
    t.iter().fold(0, |acc, &g| acc * group_order + g)
}

/// The alternating-sum coboundary of the cochain complex of maps G^n -> A,
/// evaluated pointwise. Degree 0: (δ a)(g) = ᵍa - a.
pub fn hu_coboundary(module: &GModule, c: &Cochain) -> Result<Cochain> {
    let g = module.group();
    let a = module.coeff();
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = c.degree;
    let ng = g.order();
    assert_eq!(c.values.len(), Cochain::len_for(ng, n));

    let out_len = Cochain::len_for(ng, n + 1);
    let mut out = vec![0usize; out_len];
    for idx in 0..out_len {
        let t = decode_tuple(idx, n + 1, ng);
        // first term: ᵍ¹ f(g_2, ..., g_{n+1})
        let mut acc = module.act(t[0], c.values[encode_tuple(&t[1..], ng)]);
        // middle terms: (-1)^i f(..., g_i g_{i+1}, ...)
        for i in 1..=n {
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&t[..i - 1]);
            merged.push(g.mul(t[i - 1], t[i]));
            merged.extend_from_slice(&t[i + 1..]);
            let term = c.values[encode_tuple(&merged, ng)];
            acc = a.mul(acc, if i % 2 == 1 { a.inv(term) } else { term });
        }
        // last term: (-1)^{n+1} f(g_1, ..., g_n)
        let term = c.values[encode_tuple(&t[..n], ng)];
        acc = a.mul(acc, if (n + 1) % 2 == 1 { a.inv(term) } else { term });
        out[idx] = acc;
    }
    Ok(Cochain { degree: n + 1, values: out })
}

/// The coboundary δ^n as an integer matrix between the coordinate
/// presentations of C^n(G, A) and C^{n+1}(G, A).
pub fn hu_delta_matrix(module: &GModule, n: usize, rank_cap: usize) -> Result<IntMatrixHom> {
    let g = module.group();
    let ast = abelian_structure(module.coeff())?;
    let k = ast.structure().rank();
    let ng = g.order();

    let src_blocks = Cochain::len_for(ng, n);
    let tgt_blocks = Cochain::len_for(ng, n + 1);
    let tgt_rank = tgt_blocks.checked_mul(k).filter(|&r| r <= rank_cap).ok_or_else(|| {
        Error::SizeLimitExceeded(format!(
            "cochain group rank {tgt_blocks} x {k} exceeds cap {rank_cap}"
        ))
    })?;
    let src_rank = src_blocks * k;

    // integer matrix of the action of g on A-coordinates
    let act_matrix = |gg: usize| -> Vec<Vec<i64>> {
        (0..k)
            .map(|j| {
                let mut unit = vec![0u64; k];
                unit[j] = 1;
                let image = module.act(gg, ast.element(&unit));
                ast.coords(image).iter().map(|&c| c as i64).collect()
            })
            .collect() // column j = image coords of generator j
    };

    let mut entries = vec![0i64; tgt_rank * src_rank];
    let mut add_block = |row_block: usize, col_block: usize, mat: Option<&Vec<Vec<i64>>>, sign: i64| {
        for i in 0..k {
            for j in 0..k {
                let v = match mat {
                    Some(m) => m[j][i], // column j, row i
                    None => i64::from(i == j),
                };
                entries[(row_block * k + i) * src_rank + col_block * k + j] += sign * v;
            }
        }
    };

    for idx in 0..tgt_blocks {
        let t = decode_tuple(idx, n + 1, ng);
        let am = act_matrix(t[0]);
        add_block(idx, encode_tuple(&t[1..], ng), Some(&am), 1);
        for i in 1..=n {
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&t[..i - 1]);
            merged.push(g.mul(t[i - 1], t[i]));
            merged.extend_from_slice(&t[i + 1..]);
            let sign = if i % 2 == 1 { -1 } else { 1 };
            add_block(idx, encode_tuple(&merged, ng), None, sign);
        }
        let sign = if (n + 1) % 2 == 1 { -1 } else { 1 };
        add_block(idx, encode_tuple(&t[..n], ng), None, sign);
    }

    let source = ast.structure().repeated(src_blocks);
    let target = ast.structure().repeated(tgt_blocks);
    IntMatrixHom::new(source, target, Mat::from_i64(tgt_rank, src_rank, &entries))
}

/// Coordinates of a cochain in the presentation used by `hu_delta_matrix`.
pub fn cochain_coords(module: &GModule, c: &Cochain) -> Result<Vec<u64>> {
    let ast = abelian_structure(module.coeff())?;
    let mut out = Vec::with_capacity(c.values.len() * ast.structure().rank());
    for &v in &c.values {
        out.extend_from_slice(ast.coords(v));
    }
    Ok(out)
}

pub fn cochain_from_coords(module: &GModule, degree: usize, coords: &[u64]) -> Result<Cochain> {
    let ast = abelian_structure(module.coeff())?;
    let k = ast.structure().rank();
    let len = Cochain::len_for(module.group().order(), degree);
    let values = if k == 0 {
        vec![0; len]
    } else {
        assert_eq!(coords.len(), len * k);
        coords.chunks(k).map(|chunk| ast.element(chunk)).collect()
    };
    Ok(Cochain { degree, values })
}

/// H^n(G, A) for abelian A via the cochain complex: Ker δ^n / Im δ^{n-1}.
/// Degree 0 is the fixed-point subgroup, cross-checked against the complex.
pub fn hu_cohomology(module: &GModule, n: usize, rank_cap: usize) -> Result<Structure> {
    if !module.coeff().is_abelian() {
        return Err(Error::NotAbelian);
    }
    let outgoing = hu_delta_matrix(module, n, rank_cap)?;
    let structure = if n == 0 {
        let s = subquotient(&outgoing, None);
        // H^0 from the complex must equal the fixed-point subgroup
        let fixed = h0(module);
        let (fixed_group, _) = Subgroup::from_members(module.coeff(), fixed.members())
            .and_then(|sub| sub.as_group())?;
        let fixed_structure = abelian_structure(&fixed_group)?;
        if fixed_structure.structure() != &s {
            return Err(Error::NotExact(
                "degree-0 cohomology disagrees with fixed points".into(),
            ));
        }
        s
    } else {
        let incoming = hu_delta_matrix(module, n - 1, rank_cap)?;
        subquotient(&outgoing, Some(&incoming))
    };
    Ok(structure)
}

/// delta^0 of a short exact sequence: for c fixed in C, pick the least
/// preimage b and return the class of g -> iota^-1(b^-1 ᵍb). Independence
/// from the preimage choice is re-verified exhaustively.
pub fn delta0(ses: &ShortExactSequence, c: usize) -> Result<Derivation> {
    let module_b = ses.pi().dom();
    let b_group = module_b.coeff();
    let module_a = ses.iota().dom();

    let preimages: Vec<usize> =
        b_group.elements().filter(|&b| ses.pi().apply(b) == c).collect();
    let connect = |b: usize| -> Result<Derivation> {
        let values = module_b
            .group()
            .elements()
            .map(|g| {
                let x = b_group.mul(b_group.inv(b), module_b.act(g, b));
                ses.iota().hom().preimage(x).ok_or_else(|| {
                    Error::ValueNotInA(format!(
                        "b^-1 * ᵍb = {x} has no preimage under iota (g = {g}, b = {b})"
                    ))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Derivation::new(module_a, values)
    };

    let first = connect(preimages[0])?;
    for &b in &preimages[1..] {
        let other = connect(b)?;
        if cohomologous(&first, &other)?.is_none() {
            return Err(Error::NotExact(
                "delta^0 depends on the choice of preimage".into(),
            ));
        }
    }
    Ok(first)
}

/// The factor set delta^1(alpha)(g,h) = s(alpha(g)) ᵍs(alpha(h)) s(alpha(gh))^-1,
/// pulled back through iota, together with its coboundary status and the
/// ambient H^2(G, A) structure.
#[derive(Clone, Debug)]
pub struct H2ClassDescriptor {
    pub factor_set: Vec<usize>,
    pub is_coboundary: bool,
    pub h2: Structure,
}

fn delta1_factor_set(
    ses: &ShortExactSequence,
    section: &Section,
    alpha: &[usize],
) -> Result<Vec<usize>> {
    let module_b = ses.pi().dom();
    let module_a = ses.iota().dom();
    let b_group = module_b.coeff();
    let g = module_b.group();
    let ng = g.order();

    let mut out = vec![0usize; ng * ng];
    for x in g.elements() {
        for y in g.elements() {
            let bx = section.apply(alpha[x]);
            let by = section.apply(alpha[y]);
            let bxy = section.apply(alpha[g.mul(x, y)]);
            let val = b_group.mul(b_group.mul(bx, module_b.act(x, by)), b_group.inv(bxy));
            let a_val = ses.iota().hom().preimage(val).ok_or_else(|| {
                Error::ValueNotInA(format!("factor set value {val} lies outside iota(A)"))
            })?;
            out[x * ng + y] = a_val;
        }
    }

    // factor set identity: ᵍz(h,k) z(g,hk) = z(gh,k) z(g,h)
    let a = module_a.coeff();
    for x in g.elements() {
        for y in g.elements() {
            for z in g.elements() {
                let lhs = a.mul(
                    module_a.act(x, out[y * ng + z]),
                    out[x * ng + g.mul(y, z)],
                );
                let rhs = a.mul(out[g.mul(x, y) * ng + z], out[x * ng + y]);
                if lhs != rhs {
                    return Err(Error::NotCocycle(format!(
                        "factor set identity fails at ({x},{y},{z})"
                    )));
                }
            }
        }
    }
    Ok(out)
}

fn is_coboundary(ses: &ShortExactSequence, factor_set: &[usize]) -> Result<bool> {
    let module_a = ses.iota().dom();
    let delta1_matrix = hu_delta_matrix(module_a, 1, DEFAULT_RANK_CAP)?;
    let c = Cochain { degree: 2, values: factor_set.to_vec() };
    let coords = cochain_coords(module_a, &c)?;
    Ok(delta1_matrix.solve(&coords).is_some())
}

/// delta^1 on a full H^1(G, C) class. Requires a central sequence.
/// Section- and representative-independence are re-verified: every class
/// member and an alternative section must yield the same coboundary status,
/// and the factor sets must differ by coboundaries.
pub fn delta1(
    ses: &ShortExactSequence,
    section: &Section,
    class: &H1Class,
    rank_cap: usize,
) -> Result<H2ClassDescriptor> {
    if !ses.central() {
        return Err(Error::NotCentral);
    }
    let module_a = ses.iota().dom();
    let rep = class.representative().values();
    let factor_set = delta1_factor_set(ses, section, rep)?;
    let cobound = is_coboundary(ses, &factor_set)?;

    let differ_by_coboundary = |other: &[usize]| -> Result<bool> {
        let a = module_a.coeff();
        let diff: Vec<usize> = factor_set
            .iter()
            .zip(other)
            .map(|(&p, &q)| a.mul(p, a.inv(q)))
            .collect();
        is_coboundary(ses, &diff)
    };

    // representative independence
    for member in class.members() {
        let fs = delta1_factor_set(ses, section, member)?;
        if !differ_by_coboundary(&fs)? {
            return Err(Error::NotExact(
                "delta^1 depends on the class representative".into(),
            ));
        }
    }
    // section independence
    for alt in ses.alternative_sections(2) {
        let fs = delta1_factor_set(ses, &alt, rep)?;
        if !differ_by_coboundary(&fs)? {
            return Err(Error::NotExact("delta^1 depends on the section".into()));
        }
    }

    let h2 = hu_cohomology(module_a, 2, rank_cap)?;
    Ok(H2ClassDescriptor { factor_set, is_coboundary: cobound, h2 })
}
