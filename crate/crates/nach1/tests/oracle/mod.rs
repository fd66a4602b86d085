//! Brute-force oracles shared by the integration suites. These deliberately
//! avoid the library's solvers: everything here is exhaustive enumeration.

use nach1::cohomology::{hu_coboundary, Cochain};
use nach1::gmodule::GModule;

/// Every map G -> A satisfying the derivation law, by full enumeration of
/// all |A|^|G| value tables.
pub fn derivations_by_bruteforce(m: &GModule) -> Vec<Vec<usize>> {
    let g = m.group();
    let a = m.coeff();
    let n = g.order();
    let na = a.order();
    let total = (na as u128).pow(n as u32);
    assert!(total <= 100_000_000, "oracle instance too large");
    let mut out = Vec::new();
    for code in 0..total {
        let mut values = vec![0usize; n];
        let mut rem = code;
        for slot in values.iter_mut() {
            *slot = (rem % na as u128) as usize;
            rem /= na as u128;
        }
        let ok = (0..n)
            .all(|x| (0..n).all(|y| values[g.mul(x, y)] == a.mul(values[x], m.act(x, values[y]))));
        if ok {
            out.push(values);
        }
    }
    out.sort_unstable();
    out
}

/// Partitions a derivation list into cohomology classes by exhaustively
/// searching for a conjugating coefficient element.
pub fn classes_by_bruteforce(m: &GModule, derivations: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let g = m.group();
    let a = m.coeff();
    let related = |alpha: &[usize], beta: &[usize]| {
        a.elements().any(|w| {
            g.elements()
                .all(|x| beta[x] == a.mul(a.mul(a.inv(w), alpha[x]), m.act(x, w)))
        })
    };
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    for d in derivations {
        match classes.iter_mut().find(|c| related(&c[0], d)) {
            Some(c) => c.push(d.clone()),
            None => classes.push(vec![d.clone()]),
        }
    }
    classes
}

fn each_cochain(m: &GModule, degree: usize, mut f: impl FnMut(&Cochain)) -> Option<()> {
    let len = Cochain::len_for(m.group().order(), degree);
    let na = m.coeff().order();
    let total = (na as u128).checked_pow(len as u32)?;
    if total > 100_000 {
        return None;
    }
    for code in 0..total {
        let mut values = vec![0usize; len];
        let mut rem = code;
        for slot in values.iter_mut() {
            *slot = (rem % na as u128) as usize;
            rem /= na as u128;
        }
        f(&Cochain { degree, values });
    }
    Some(())
}

/// |H^n(G, A)| by full cochain enumeration: |Ker delta^n| / |Im delta^(n-1)|.
/// Returns None when either cochain group exceeds 10^5 elements.
pub fn hn_count_by_enumeration(m: &GModule, n: usize) -> Option<u128> {
    let mut kernel: u128 = 0;
    each_cochain(m, n, |c| {
        let dc = hu_coboundary(m, c).expect("abelian coefficients");
        if dc.values.iter().all(|&v| v == 0) {
            kernel += 1;
        }
    })?;
    let image: u128 = if n == 0 {
        1
    } else {
        let mut seen = std::collections::HashSet::new();
        each_cochain(m, n - 1, |c| {
            let dc = hu_coboundary(m, c).expect("abelian coefficients");
            seen.insert(dc.values);
        })?;
        seen.len() as u128
    };
    assert_eq!(kernel % image, 0, "coboundaries must form a subgroup of cocycles");
    Some(kernel / image)
}
