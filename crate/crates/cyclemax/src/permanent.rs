//! Matrix permanents.  The permanent of the adjacency-plus-identity matrix
//! counts successor assignments (each vertex picks itself or a neighbour,
//! injectively), and half of it bounds the cycle count from above.  Dense
//! Ryser handles arbitrary 0/1 matrices up to n = 30; the block evaluator
//! exploits blowup structure and reaches part sizes far beyond Ryser's
//! reach.

use crate::cycles::binomial;
use crate::graph::{Graph, LabeledGraph};
use crate::modular::{crt_combine, primes_below_2_62, Montgomery};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Dense 0/1 matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix01 {
    n: usize,
    entries: Vec<u8>,
}

impl DenseMatrix01 {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidArgument("matrix must be square".into()));
            }
            for &e in row {
                if e > 1 {
                    return Err(Error::InvalidArgument("entries must be 0 or 1".into()));
                }
                entries.push(e);
            }
        }
        Ok(DenseMatrix01 { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}

/// Ryser's inclusion-exclusion formula with Gray-code column updates.
/// Exponential in n; refuses n > 30.
pub fn ryser_permanent(m: &DenseMatrix01) -> Result<BigUint> {
    let n = m.n;
    if n > 30 {
        return Err(Error::OutOfRange(format!(
            "dense permanent limited to n <= 30, got {n}"
        )));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let mut rowsum = vec![0i64; n];
    let mut total = BigInt::zero();
    let mut local: i128 = 0;
    for s in 1u64..1 << n {
        let j = s.trailing_zeros() as usize;
        let gray = s ^ (s >> 1);
        let added = gray >> j & 1 == 1;
        for i in 0..n {
            let a = m.get(i, j) as i64;
            if added {
                rowsum[i] += a;
            } else {
                rowsum[i] -= a;
            }
        }
        let mut prod: i128 = 1;
        let mut overflow = false;
        for &r in &rowsum {
            match prod.checked_mul(r as i128) {
                Some(p) => prod = p,
                None => {
                    overflow = true;
                    break;
                }
            }
            if prod == 0 {
                break;
            }
        }
        let bits = gray.count_ones() as usize;
        let sign_neg = (n - bits) % 2 == 1;
        if overflow {
            // Fall back to arbitrary precision for this subset.
            let mut big = BigInt::one();
            for &r in &rowsum {
                big *= r;
            }
            if sign_neg {
                total -= big;
            } else {
                total += big;
            }
            continue;
        }
        let term = if sign_neg { -prod } else { prod };
        match local.checked_add(term) {
            Some(s) => local = s,
            None => {
                total += BigInt::from(local);
                local = term;
            }
        }
    }
    total += BigInt::from(local);
    if total.is_negative() {
        return Err(Error::InvalidArgument(
            "permanent of a 0/1 matrix cannot be negative".into(),
        ));
    }
    Ok(total.to_biguint().unwrap())
}

/// Block-structured adjacency-plus-identity matrix of a blowup: `sizes`
/// gives the block sizes, `h` the symmetric 0/1 adjacency of the base.
/// Diagonal blocks are identity, off-diagonal blocks are constant h[r][c].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMatrixSpec {
    sizes: Vec<usize>,
    h: Vec<Vec<u8>>,
}

impl BlockMatrixSpec {
    pub fn new(sizes: Vec<usize>, h: Vec<Vec<u8>>) -> Result<Self> {
        let p = sizes.len();
        if p == 0 {
            return Err(Error::InvalidArgument("at least one block required".into()));
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidArgument("block sizes must be positive".into()));
        }
        if h.len() != p || h.iter().any(|row| row.len() != p) {
            return Err(Error::InvalidArgument(format!(
                "base adjacency must be {p}x{p}"
            )));
        }
        for r in 0..p {
            if h[r][r] != 0 {
                return Err(Error::InvalidArgument("base adjacency has a loop".into()));
            }
            for c in 0..p {
                if h[r][c] > 1 {
                    return Err(Error::InvalidArgument("entries must be 0 or 1".into()));
                }
                if h[r][c] != h[c][r] {
                    return Err(Error::InvalidArgument("base adjacency not symmetric".into()));
                }
            }
        }
        Ok(BlockMatrixSpec { sizes, h })
    }

    pub fn from_base(base: &LabeledGraph, sizes: Vec<usize>) -> Result<Self> {
        let p = base.p();
        let h = (0..p)
            .map(|r| {
                (0..p)
                    .map(|c| base.graph().has_edge(r, c) as u8)
                    .collect()
            })
            .collect();
        Self::new(sizes, h)
    }

    pub fn p(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn h(&self) -> &[Vec<u8>] {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Materialize the dense matrix a block spec describes.
pub fn expand_block_spec(spec: &BlockMatrixSpec) -> DenseMatrix01 {
    let p = spec.p();
    let n = spec.n();
    let mut start = vec![0usize; p + 1];
    for j in 0..p {
        start[j + 1] = start[j] + spec.sizes[j];
    }
    let mut entries = vec![0u8; n * n];
    for r in 0..p {
        for c in 0..p {
            for i in start[r]..start[r + 1] {
                for j in start[c]..start[c + 1] {
                    entries[i * n + j] = if r == c {
                        (i == j) as u8
                    } else {
                        spec.h[r][c]
                    };
                }
            }
        }
    }
    DenseMatrix01 { n, entries }
}

/// Work estimate: number of coefficient vectors the block evaluation visits.
fn vector_count(spec: &BlockMatrixSpec) -> u128 {
    spec.sizes
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(s as u128 + 1))
}

/// Permanent of the expanded matrix, computed per block.
///
/// Rows inside a block are interchangeable, so the permanent is a signed sum
/// over one coefficient 0..nᵢ per block instead of over all 2^n subsets:
/// picking kᵢ of the nᵢ identity columns in block i contributes binomial
/// weight C(nᵢ,kᵢ) and makes every row of block r sum to rsum_r (+1 with its
/// own identity column), where rsum_r totals the coefficients of adjacent
/// blocks.  Small instances are evaluated directly in big integers; large
/// ones go through word-sized residues combined by the Chinese remainder
/// theorem, which keeps the inner loop in u64.
pub fn block_permanent(spec: &BlockMatrixSpec) -> BigUint {
    if vector_count(spec) <= 1 << 17 {
        block_permanent_direct(spec)
    } else {
        block_permanent_residue(spec)
    }
}

fn row_sums(spec: &BlockMatrixSpec, k: &[usize]) -> Vec<usize> {
    let p = spec.p();
    (0..p)
        .map(|r| (0..p).filter(|&c| spec.h[r][c] == 1).map(|c| k[c]).sum())
        .collect()
}

fn block_permanent_direct(spec: &BlockMatrixSpec) -> BigUint {
    let p = spec.p();
    let n = spec.n();
    let max_size = *spec.sizes.iter().max().unwrap();
    // pow[b][e] = b^e for the bases and exponents that can occur.
    let pows: Vec<Vec<BigUint>> = (0..=n + 1)
        .map(|b| {
            let mut row = Vec::with_capacity(max_size + 1);
            row.push(BigUint::one());
            for e in 1..=max_size {
                row.push(&row[e - 1] * b as u64);
            }
            row
        })
        .collect();
    let binomials: Vec<Vec<BigUint>> = spec
        .sizes
        .iter()
        .map(|&s| (0..=s).map(|k| binomial(s, k)).collect())
        .collect();

    let mut total = BigInt::zero();
    let mut k = vec![0usize; p];
    loop {
        let rs = row_sums(spec, &k);
        let mut term = BigUint::one();
        for r in 0..p {
            term *= &binomials[r][k[r]];
            term *= &pows[rs[r] + 1][k[r]];
            term *= &pows[rs[r]][spec.sizes[r] - k[r]];
        }
        let dropped: usize = (0..p).map(|r| spec.sizes[r] - k[r]).sum();
        let signed = BigInt::from_biguint(
            if dropped % 2 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            },
            term,
        );
        total += signed;
        // Odometer increment.
        let mut d = 0;
        loop {
            if d == p {
                debug_assert!(!total.is_negative());
                return total.to_biguint().expect("permanent is nonnegative");
            }
            if k[d] < spec.sizes[d] {
                k[d] += 1;
                break;
            }
            k[d] = 0;
            d += 1;
        }
    }
}

fn block_permanent_residue(spec: &BlockMatrixSpec) -> BigUint {
    let p = spec.p();
    let n = spec.n();
    // perm(M) is at most the product of the row sums of the expanded
    // matrix; size the prime set from that.
    let mut bound = BigUint::one();
    for r in 0..p {
        let rowsum = 1 + (0..p)
            .filter(|&c| spec.h[r][c] == 1)
            .map(|c| spec.sizes[c])
            .sum::<usize>();
        bound *= BigUint::from(rowsum as u64).pow(spec.sizes[r] as u32);
    }
    let mut count = 1;
    loop {
        let prod: BigUint = primes_below_2_62(count)
            .iter()
            .fold(BigUint::one(), |acc, &q| acc * q);
        if prod > bound {
            break;
        }
        count += 1;
    }
    let moduli = primes_below_2_62(count);
    let residues: Vec<u64> = moduli
        .par_iter()
        .map(|&q| block_permanent_mod(spec, n, q))
        .collect();
    crt_combine(&residues, &moduli)
}

/// Signed block sum modulo a single prime, Montgomery inner loop.
fn block_permanent_mod(spec: &BlockMatrixSpec, n: usize, q: u64) -> u64 {
    let p = spec.p();
    let mont = Montgomery::new(q);
    // w[r][k * (n+1) + rsum] = ±C(n_r,k)·(rsum+1)^k·rsum^(n_r−k) in
    // Montgomery form, sign folded per row.
    let stride = n + 1;
    let w: Vec<Vec<u64>> = (0..p)
        .map(|r| {
            let nr = spec.sizes[r];
            let mut table = vec![0u64; (nr + 1) * stride];
            for k in 0..=nr {
                let c = (&binomial(nr, k) % q).to_u64_digits().first().copied().unwrap_or(0);
                for rsum in 0..=n {
                    let mut v = mulmod_u64(c, powmod_u64(rsum as u64 + 1, k as u64, q), q);
                    v = mulmod_u64(v, powmod_u64(rsum as u64, (nr - k) as u64, q), q);
                    if (nr - k) % 2 == 1 && v != 0 {
                        v = q - v;
                    }
                    table[k * stride + rsum] = mont.to_mont(v);
                }
            }
            table
        })
        .collect();
    let mut k = vec![0usize; p];
    let mut rs = row_sums(spec, &k);
    let mut sum = 0u64; // Montgomery form accumulates additively as usual.
    loop {
        let mut term = w[0][k[0] * stride + rs[0]];
        for r in 1..p {
            term = mont.mul(term, w[r][k[r] * stride + rs[r]]);
        }
        sum = mont.add(sum, term);
        let mut d = 0;
        loop {
            if d == p {
                return mont.from_mont(sum);
            }
            if k[d] < spec.sizes[d] {
                k[d] += 1;
                for r in 0..p {
                    if spec.h[r][d] == 1 {
                        rs[r] += 1;
                    }
                }
                break;
            }
            for r in 0..p {
                if spec.h[r][d] == 1 {
                    rs[r] -= k[d];
                }
            }
            k[d] = 0;
            d += 1;
        }
    }
}

fn mulmod_u64(a: u64, b: u64, q: u64) -> u64 {
    (a as u128 * b as u128 % q as u128) as u64
}

fn powmod_u64(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1u64;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod_u64(r, a, q);
        }
        a = mulmod_u64(a, a, q);
        e >>= 1;
    }
    r
}

/// ⌊perm(A+I)/2⌋ for an arbitrary graph: every cycle yields two successor
/// assignments (one per orientation), so this dominates the cycle count.
pub fn cycle_bound_perm(g: &Graph) -> Result<BigUint> {
    let n = g.n();
    if n > 30 {
        return Err(Error::OutOfRange(format!(
            "dense cycle bound limited to n <= 30, got {n}"
        )));
    }
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (i == j || g.has_edge(i, j)) as u8)
                .collect()
        })
        .collect();
    let m = DenseMatrix01::from_rows(rows)?;
    Ok(ryser_permanent(&m)? / 2u32)
}

/// Same bound computed blockwise for a blowup.
pub fn cycle_bound_blowup(spec: &BlockMatrixSpec) -> BigUint {
    block_permanent(spec) / 2u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_bipartite, make_gamma};

    fn gamma_spec(i: usize, sizes: Vec<usize>) -> BlockMatrixSpec {
        BlockMatrixSpec::from_base(&make_gamma(i).unwrap(), sizes).unwrap()
    }

    #[test]
    fn ryser_small_cases() {
        let id = DenseMatrix01::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(ryser_permanent(&id).unwrap(), BigUint::from(1u32));
        let ones3 = DenseMatrix01::from_rows(vec![vec![1; 3]; 3]).unwrap();
        assert_eq!(ryser_permanent(&ones3).unwrap(), BigUint::from(6u32));
        // Permanent of J_n is n!.
        let ones8 = DenseMatrix01::from_rows(vec![vec![1; 8]; 8]).unwrap();
        assert_eq!(ryser_permanent(&ones8).unwrap(), BigUint::from(40320u32));
        let zero = DenseMatrix01::from_rows(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(ryser_permanent(&zero).unwrap(), BigUint::zero());
    }

    #[test]
    fn block_matches_ryser_on_identity_blowup() {
        let spec = gamma_spec(2, vec![1; 5]);
        let dense = expand_block_spec(&spec);
        assert_eq!(
            block_permanent(&spec),
            ryser_permanent(&dense).unwrap()
        );
    }

    #[test]
    fn appendix_matrix() {
        let spec = gamma_spec(2, vec![2; 5]);
        let dense = expand_block_spec(&spec);
        assert_eq!(dense.n(), 10);
        // Off-diagonal blocks follow the base adjacency (0 ~ 2, 3).
        assert_eq!(dense.get(0, 1), 0);
        assert_eq!(dense.get(0, 4), 1);
        assert_eq!(dense.get(0, 0), 1);
        assert_eq!(block_permanent(&spec), BigUint::from(5753u32));
        assert_eq!(cycle_bound_blowup(&spec), BigUint::from(2876u32));
        assert_eq!(
            ryser_permanent(&dense).unwrap(),
            BigUint::from(5753u32)
        );
    }

    #[test]
    fn table_bounds_small() {
        assert_eq!(cycle_bound_blowup(&gamma_spec(3, vec![1; 8])), BigUint::from(130u32));
        assert_eq!(cycle_bound_blowup(&gamma_spec(4, vec![1; 11])), BigUint::from(6151u32));
        assert_eq!(
            cycle_bound_blowup(&gamma_spec(5, vec![1; 14])),
            BigUint::from(602261u32)
        );
    }

    #[test]
    fn residue_path_matches_direct() {
        // Big enough to trigger the residue path when asked directly.
        let spec = gamma_spec(2, vec![4, 3, 4, 3, 4]);
        let direct = block_permanent_direct(&spec);
        let residue = block_permanent_residue(&spec);
        assert_eq!(direct, residue);
    }

    #[test]
    fn dense_bound_on_graphs() {
        let c5 = make_gamma(2).unwrap();
        // perm(A+I) of C5 counts its successor assignments.
        let b = cycle_bound_perm(c5.graph()).unwrap();
        assert!(b >= BigUint::from(1u32));
        let k23 = make_complete_bipartite(2, 3).unwrap();
        assert!(cycle_bound_perm(&k23).unwrap() >= BigUint::from(3u32));
        let mut big = Graph::new(31);
        big.add_edge(0, 1).unwrap();
        assert!(cycle_bound_perm(&big).is_err());
    }

    use crate::graph::Graph;
    use num_traits::Zero;
}
