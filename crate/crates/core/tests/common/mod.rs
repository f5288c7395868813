//! Brute-force oracles. Nothing here goes through cycle types, class sizes or
//! the closed-form determinant.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use symhodge::{ExteriorPresentation, Monomial, Preset, TriPoly};

pub fn acceptance_presets() -> Vec<Preset> {
    vec![
        Preset::Torus { d: 1 },
        Preset::Torus { d: 2 },
        Preset::Cstar { r: 1 },
        Preset::Cstar { r: 3 },
        Preset::Gl { m: 2 },
        Preset::Gl { m: 3 },
    ]
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Sign of a 0-based permutation by counting inversions.
pub fn parity_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion of `det(A)` for a square matrix of polynomials.
pub fn leibniz_det(a: &[Vec<TriPoly>]) -> TriPoly {
    let n = a.len();
    let mut total = TriPoly::zero();
    for sigma in permutations(n) {
        let mut prod = TriPoly::constant(parity_sign(&sigma));
        for (row, &col) in sigma.iter().enumerate() {
            if a[row][col].is_zero() {
                prod = TriPoly::zero();
                break;
            }
            prod = &prod * &a[row][col];
        }
        total = total + prod;
    }
    total
}

/// `I + w·M_α` with `M_α e_j = e_{α(j)}`.
pub fn identity_plus_perm_matrix(alpha: &[usize], w: Monomial) -> Vec<Vec<TriPoly>> {
    let n = alpha.len();
    let mut m = vec![vec![TriPoly::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = TriPoly::one();
    }
    for (j, &aj) in alpha.iter().enumerate() {
        m[aj][j] = &m[aj][j] + &TriPoly::term(w, 1);
    }
    m
}

/// `(1/n!) Σ_{α ∈ S_n} ∏_i det(I + w_i M_α)^{r_i}`, literally.
pub fn naive_sym_mhp(pres: &ExteriorPresentation, n: usize) -> TriPoly {
    let perms = permutations(n);
    let mut total = TriPoly::zero();
    for alpha in &perms {
        let mut prod = TriPoly::one();
        for f in pres.families() {
            let det = leibniz_det(&identity_plus_perm_matrix(alpha, f.monomial()));
            for _ in 0..f.r {
                prod = &prod * &det;
            }
        }
        total = total + prod;
    }
    total.div_exact(&BigInt::from(perms.len())).expect("naive average is integral")
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Graded dimensions of the `S_n`-invariants of `H^*(X)^{⊗n}`, computed on an
/// explicit basis of the exterior algebra on `n` copies of the generators.
///
/// Basis vectors are subsets of generators `(factor, g)`, written as wedge
/// products in increasing index order. A permutation of the factors moves each
/// generator to another factor; reordering the wedge product back into
/// increasing order costs the sign of the sorting permutation, since every
/// generator has odd degree. The invariant dimension in each degree is the rank
/// of the Reynolds operator `Σ_σ ρ(σ)` restricted to that degree.
pub fn invariant_subspace_dims(pres: &ExteriorPresentation, n: usize) -> TriPoly {
    let gens: Vec<Monomial> = pres
        .families()
        .iter()
        .flat_map(|f| std::iter::repeat_n(f.monomial(), f.r as usize))
        .collect();
    let g = gens.len();
    let total = g * n;
    assert!(total <= 16, "basis too large for the brute-force oracle");
    let index = |factor: usize, gen: usize| factor * g + gen;

    let degree = |mask: u32| {
        (0..total)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Monomial::ONE, |acc, i| acc * gens[i % g])
    };
    let mut pieces: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
    for mask in 0u32..(1 << total) {
        pieces.entry(degree(mask)).or_default().push(mask);
    }

    let perms = permutations(n);
    let mut out = TriPoly::zero();
    for (mono, basis) in pieces {
        let pos: BTreeMap<u32, usize> = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut reynolds = vec![vec![BigRational::zero(); basis.len()]; basis.len()];
        for (col, &mask) in basis.iter().enumerate() {
            let wedge: Vec<usize> = (0..total).filter(|i| mask >> i & 1 == 1).collect();
            for sigma in &perms {
                let images: Vec<usize> = wedge.iter().map(|&i| index(sigma[i / g], i % g)).collect();
                let mut sorted = images.clone();
                sorted.sort_unstable();
                let order: Vec<usize> = images
                    .iter()
                    .map(|x| sorted.iter().position(|y| y == x).unwrap())
                    .collect();
                let sign = parity_sign(&order);
                let target: u32 = sorted.iter().map(|&i| 1u32 << i).sum();
                reynolds[pos[&target]][col] += BigRational::from_integer(BigInt::from(sign));
            }
        }
        let r = rank(reynolds);
        if r > 0 {
            out = out + TriPoly::term(mono, r as i64);
        }
    }
    out
}

pub fn torus1() -> ExteriorPresentation {
    Preset::Torus { d: 1 }.presentation().unwrap()
}

pub fn poly(terms: &[(i64, u32, u32, u32)]) -> TriPoly {
    TriPoly::from_terms(terms.iter().map(|&(c, k, p, q)| (Monomial::new(k, p, q), c)))
}
