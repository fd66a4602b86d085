//! Finite abelian structure theory over the integers.
//!
//! Smith normal form of integer matrices drives everything: invariant
//! factor decompositions of abelian coefficient groups, and kernels,
//! images, and cokernels of homomorphisms between them. Arithmetic is
//! arbitrary precision so intermediate entries can never overflow.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::group::FiniteGroup;
use crate::{Error, Result};

/// Cap on kernel-subgroup enumeration when canonicalizing preimages.
const KERNEL_ENUM_CAP: usize = 10_000;

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, data: entries.iter().map(|&e| BigInt::from(e)).collect() }
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += c * row b
    fn row_axpy(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = c * &self[(b, j)];
            self[(a, j)] += add;
        }
    }

    /// col a += c * col b
    fn col_axpy(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = c * &self[(i, b)];
            self[(i, a)] += add;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self[(i, a)].clone();
            self[(i, a)] = v;
        }
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// u * m * v = diag(d), with u, v unimodular. `uinv` is the inverse of u.
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub u: Mat,
    pub uinv: Mat,
    pub v: Mat,
    pub rank: usize,
}

pub fn smith(m: &Mat) -> Smith {
    let mut a = m.clone();
    let mut u = Mat::identity(m.rows);
    let mut uinv = Mat::identity(m.rows);
    let mut v = Mat::identity(m.cols);

    let dim = m.rows.min(m.cols);
    let mut t = 0;
    while t < dim {
        // pivot: minimal absolute nonzero entry in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                if !a[(i, j)].is_zero()
                    && pivot.map_or(true, |(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        uinv.swap_cols(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = false;
        while !clean {
            clean = true;
            for i in (t + 1)..a.rows {
                if !a[(i, t)].is_zero() {
                    let q = div_nearest(&a[(i, t)], &a[(t, t)]);
                    let nq = -&q;
                    a.row_axpy(i, t, &nq);
                    u.row_axpy(i, t, &nq);
                    uinv.col_axpy(t, i, &q);
                    if !a[(i, t)].is_zero() {
                        // remainder became the smaller pivot
                        a.swap_rows(t, i);
                        u.swap_rows(t, i);
                        uinv.swap_cols(t, i);
                        clean = false;
                    }
                }
            }
            for j in (t + 1)..a.cols {
                if !a[(t, j)].is_zero() {
                    let q = div_nearest(&a[(t, j)], &a[(t, t)]);
                    let nq = -q;
                    a.col_axpy(j, t, &nq);
                    v.col_axpy(j, t, &nq);
                    if !a[(t, j)].is_zero() {
                        a.swap_cols(t, j);
                        v.swap_cols(t, j);
                        clean = false;
                    }
                }
            }
            if clean {
                // enforce divisibility of the trailing block by the pivot
                'outer: for i in (t + 1)..a.rows {
                    for j in (t + 1)..a.cols {
                        if !(&a[(i, j)] % &a[(t, t)]).is_zero() {
                            let one = BigInt::one();
                            a.row_axpy(t, i, &one);
                            u.row_axpy(t, i, &one);
                            let neg = -BigInt::one();
                            uinv.col_axpy(i, t, &neg);
                            clean = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            uinv.negate_col(t);
        }
        t += 1;
    }

    let rank = t;
    let diag: Vec<BigInt> = (0..dim).map(|i| a[(i, i)].clone()).collect();
    Smith { diag, u, uinv, v, rank }
}

/// Quotient rounded to nearest, so |a - q*b| <= |b|/2.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) ^ (b.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Invariant factors d_1 | d_2 | ... of a finite abelian group; every
/// factor is >= 2. Doubles as the generator-order list of a direct sum
/// when no divisibility chain is promised (cochain groups concatenate
/// blocks).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    factors: Vec<u64>,
}

impl Structure {
    pub fn new(factors: Vec<u64>) -> Self {
        assert!(factors.iter().all(|&d| d >= 2));
        Self { factors }
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// "C_2 x C_4", or "1" for the trivial group.
    pub fn display(&self) -> String {
        if self.factors.is_empty() {
            "1".to_string()
        } else {
            self.factors
                .iter()
                .map(|d| format!("C_{d}"))
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }

    /// Direct sum of `copies` copies of self.
    pub fn repeated(&self, copies: usize) -> Structure {
        let mut factors = Vec::with_capacity(self.factors.len() * copies);
        for _ in 0..copies {
            factors.extend_from_slice(&self.factors);
        }
        Structure { factors }
    }

    fn reduce(&self, coords: &[BigInt]) -> Vec<u64> {
        coords
            .iter()
            .zip(&self.factors)
            .map(|(c, &d)| {
                let d = BigInt::from(d);
                let r = c.mod_floor(&d);
                u64::try_from(r).expect("reduced coordinate fits u64")
            })
            .collect()
    }
}

/// Invariant-factor decomposition of a concrete abelian group, with the
/// explicit isomorphism in both directions.
#[derive(Clone, Debug)]
pub struct AbelianStructure {
    group: Arc<FiniteGroup>,
    structure: Structure,
    elem_to_coords: Vec<Vec<u64>>,
    coords_to_elem: HashMap<Vec<u64>, usize>,
}

impl AbelianStructure {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn coords(&self, element: usize) -> &[u64] {
        &self.elem_to_coords[element]
    }

    pub fn element(&self, coords: &[u64]) -> usize {
        self.coords_to_elem[coords]
    }
}

/// Decomposes an abelian group into invariant factors, with the explicit
/// isomorphism checked exhaustively. Deterministic: the presentation uses
/// every element as a generator, so the answer depends only on the table.
pub fn abelian_structure(a: &Arc<FiniteGroup>) -> Result<AbelianStructure> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = a.order();

    // Columns are the relations e_i + e_j - e_{i*j} of the presentation
    // Z^n -> A, e_i -> element i. These generate the full relation lattice.
    let mut rel_cols: Vec<Vec<i64>> = Vec::new();
    {
        let mut seen = std::collections::HashSet::new();
        for i in 0..n {
            for j in 0..n {
                let mut col = vec![0i64; n];
                col[i] += 1;
                col[j] += 1;
                col[a.mul(i, j)] -= 1;
                if col.iter().any(|&c| c != 0) && seen.insert(col.clone()) {
                    rel_cols.push(col);
                }
            }
        }
    }
    let mut m = Mat::zeros(n, rel_cols.len());
    for (j, col) in rel_cols.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = BigInt::from(col[i]);
        }
    }
    let s = smith(&m);

    // quotient Z^n / relations: coordinate i of element x is (U e_x)_i mod d_i
    let kept: Vec<usize> = (0..n).filter(|&i| s.diag.get(i).map_or(true, |d| *d != BigInt::one())).collect();
    // the quotient is finite of order n, so every kept diagonal is >= 2
    let mut factors = Vec::new();
    for &i in &kept {
        let d = s.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        let d64 = u64::try_from(&d).map_err(|_| {
            Error::InvalidTable("relation lattice is not full rank".to_string())
        })?;
        if d64 < 2 {
            return Err(Error::InvalidTable("relation lattice is not full rank".to_string()));
        }
        factors.push(d64);
    }
    let structure = Structure::new(factors);

    let mut elem_to_coords = Vec::with_capacity(n);
    for x in 0..n {
        let full: Vec<BigInt> = (0..n).map(|i| s.u[(i, x)].clone()).collect();
        let coords: Vec<u64> = kept
            .iter()
            .enumerate()
            .map(|(pos, &i)| {
                let d = BigInt::from(structure.factors()[pos]);
                u64::try_from(full[i].mod_floor(&d)).unwrap()
            })
            .collect();
        elem_to_coords.push(coords);
    }

    let mut coords_to_elem = HashMap::with_capacity(n);
    for (x, coords) in elem_to_coords.iter().enumerate() {
        if coords_to_elem.insert(coords.clone(), x).is_some() {
            return Err(Error::InvalidTable(
                "invariant factor isomorphism is not injective".to_string(),
            ));
        }
    }
    // exhaustive isomorphism check: coordinates add where elements multiply
    for x in 0..n {
        for y in 0..n {
            let sum: Vec<u64> = elem_to_coords[x]
                .iter()
                .zip(&elem_to_coords[y])
                .zip(structure.factors())
                .map(|((&cx, &cy), &d)| (cx + cy) % d)
                .collect();
            if coords_to_elem[&sum] != a.mul(x, y) {
                return Err(Error::InvalidTable(
                    "invariant factor map is not a homomorphism".to_string(),
                ));
            }
        }
    }

    Ok(AbelianStructure { group: Arc::clone(a), structure, elem_to_coords, coords_to_elem })
}

/// A homomorphism between finite abelian groups presented by generator
/// orders, as an integer matrix (columns = images of source generators).
#[derive(Clone, Debug)]
pub struct IntMatrixHom {
    source: Structure,
    target: Structure,
    mat: Mat,
}

impl IntMatrixHom {
    pub fn new(source: Structure, target: Structure, mat: Mat) -> Result<Self> {
        assert_eq!(mat.rows, target.rank());
        assert_eq!(mat.cols, source.rank());
        // well-definedness: the image of each source generator must have
        // order dividing the generator's order
        for j in 0..source.rank() {
            let dj = BigInt::from(source.factors()[j]);
            for i in 0..target.rank() {
                let di = BigInt::from(target.factors()[i]);
                if !((&mat[(i, j)] * &dj) % &di).is_zero() {
                    return Err(Error::NotAHomomorphism(format!(
                        "generator {j} of order {dj} maps to an element whose \
                         coordinate {i} has order not dividing {dj}"
                    )));
                }
            }
        }
        Ok(Self { source, target, mat })
    }

    pub fn zero(source: Structure, target: Structure) -> Self {
        let mat = Mat::zeros(target.rank(), source.rank());
        Self { source, target, mat }
    }

    pub fn source(&self) -> &Structure {
        &self.source
    }

    pub fn target(&self) -> &Structure {
        &self.target
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn apply(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.source.rank());
        let full: Vec<BigInt> = (0..self.target.rank())
            .map(|i| {
                (0..self.source.rank())
                    .map(|j| &self.mat[(i, j)] * BigInt::from(coords[j]))
                    .sum()
            })
            .collect();
        self.target.reduce(&full)
    }

    /// [M | diag(target orders)] as one matrix; its cokernel is the
    /// cokernel of the homomorphism.
    fn augmented(&self) -> Mat {
        let t = self.target.rank();
        let s = self.source.rank();
        let mut m = Mat::zeros(t, s + t);
        for i in 0..t {
            for j in 0..s {
                m[(i, j)] = self.mat[(i, j)].clone();
            }
            m[(i, s + i)] = BigInt::from(self.target.factors()[i]);
        }
        m
    }

    /// (|kernel|, |image|, cokernel structure). Exact arithmetic throughout;
    /// |kernel| * |image| = |source| by construction.
    pub fn kernel_image_cokernel(&self) -> (BigUint, BigUint, Structure) {
        let s = smith(&self.augmented());
        let mut coker_factors = Vec::new();
        for d in &s.diag {
            let d = u64::try_from(d).expect("cokernel of a finite group is finite");
            if d >= 2 {
                coker_factors.push(d);
            }
        }
        let coker = Structure::new(coker_factors);
        let image = self.target.order() / coker.order();
        let kernel = self.source.order() / &image;
        (kernel, image, coker)
    }

    /// Generators of the kernel subgroup inside the finite source group,
    /// as reduced coordinate vectors.
    fn kernel_generators(&self) -> Vec<Vec<u64>> {
        let s = self.source.rank();
        let sm = smith(&self.augmented());
        let mut gens = Vec::new();
        for j in sm.rank..sm.v.cols {
            let col: Vec<BigInt> = (0..s).map(|i| sm.v[(i, j)].clone()).collect();
            let reduced = self.source.reduce(&col);
            if reduced.iter().any(|&c| c != 0) {
                gens.push(reduced);
            }
        }
        gens
    }

    /// One preimage of `target_coords` if it lies in the image, else None.
    /// The result is the lexicographically least solution when the kernel
    /// subgroup is small enough to enumerate (deterministic either way).
    pub fn solve(&self, target_coords: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(target_coords.len(), self.target.rank());
        let s = self.source.rank();
        let aug = self.augmented();
        let sm = smith(&aug);
        let rhs: Vec<BigInt> = (0..aug.rows)
            .map(|i| {
                (0..aug.rows)
                    .map(|j| &sm.u[(i, j)] * BigInt::from(target_coords[j]))
                    .sum()
            })
            .collect();
        let mut z = vec![BigInt::zero(); aug.cols];
        for i in 0..aug.rows {
            let d = sm.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                if !rhs[i].is_zero() {
                    return None;
                }
            } else {
                let (q, r) = rhs[i].div_rem(&d);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            }
        }
        let y: Vec<BigInt> = (0..aug.cols)
            .map(|i| (0..aug.cols).map(|j| &sm.v[(i, j)] * &z[j]).sum())
            .collect();
        let x = self.source.reduce(&y[0..s]);
        debug_assert_eq!(self.apply(&x), target_coords);

        // canonicalize: least solution in lexicographic coordinate order
        let gens = self.kernel_generators();
        let mut kernel: Vec<Vec<u64>> = vec![vec![0; s]];
        let mut seen: std::collections::HashSet<Vec<u64>> = kernel.iter().cloned().collect();
        let mut head = 0;
        while head < kernel.len() {
            let cur = kernel[head].clone();
            head += 1;
            for g in &gens {
                let next: Vec<u64> = cur
                    .iter()
                    .zip(g)
                    .zip(self.source.factors())
                    .map(|((&c, &gc), &d)| (c + gc) % d)
                    .collect();
                if seen.insert(next.clone()) {
                    kernel.push(next);
                }
            }
            if kernel.len() > KERNEL_ENUM_CAP {
                return Some(x);
            }
        }
        kernel
            .into_iter()
            .map(|k| {
                x.iter()
                    .zip(&k)
                    .zip(self.source.factors())
                    .map(|((&c, &kc), &d)| (c + kc) % d)
                    .collect::<Vec<u64>>()
            })
            .min()
    }
}

/// Invariant factors of Ker(outgoing) / Im(incoming) inside the finite
/// group presented by `outgoing.source`. `incoming` is None in degree 0.
pub fn subquotient(outgoing: &IntMatrixHom, incoming: Option<&IntMatrixHom>) -> Structure {
    let r = outgoing.source.rank();
    if r == 0 {
        return Structure::trivial();
    }
    if let Some(inc) = incoming {
        assert_eq!(inc.target.factors(), outgoing.source.factors());
    }

    // kernel of the outgoing map, as a full-rank sublattice of Z^r
    let aug = outgoing.augmented();
    let sm = smith(&aug);
    let kernel_rank = aug.cols - sm.rank;
    assert_eq!(kernel_rank, r, "kernel lattice of a finite-group hom has full rank");
    let mut w = Mat::zeros(r, r);
    for (k, j) in (sm.rank..aug.cols).enumerate() {
        for i in 0..r {
            w[(i, k)] = sm.v[(i, j)].clone();
        }
    }

    // bounding lattice: image columns plus the order relations of C^n
    let inc_cols = incoming.map_or(0, |m| m.mat.cols);
    let mut b = Mat::zeros(r, inc_cols + r);
    if let Some(inc) = incoming {
        for i in 0..r {
            for j in 0..inc_cols {
                b[(i, j)] = inc.mat[(i, j)].clone();
            }
        }
    }
    for i in 0..r {
        b[(i, inc_cols + i)] = BigInt::from(outgoing.source.factors()[i]);
    }

    // express the bounding lattice in the kernel basis: solve W X = B
    let ws = smith(&w);
    let ub = ws.u.matmul(&b);
    let mut x = Mat::zeros(r, b.cols);
    for i in 0..r {
        let d = &ws.diag[i];
        assert!(!d.is_zero());
        for j in 0..b.cols {
            let (q, rem) = ub[(i, j)].div_rem(d);
            assert!(rem.is_zero(), "bounding lattice must sit inside the kernel");
            x[(i, j)] = q;
        }
    }
    let x = ws.v.matmul(&x);

    let xs = smith(&x);
    let mut factors = Vec::new();
    for d in &xs.diag {
        let d = u64::try_from(d).expect("subquotient of a finite group is finite");
        assert!(d >= 1, "subquotient of a finite group is finite");
        if d >= 2 {
            factors.push(d);
        }
    }
    Structure::new(factors)
}
