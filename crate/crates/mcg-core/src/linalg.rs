//! Exact integer matrices: multiplication, determinant, Smith normal form.
//!
//! Everything is over `BigInt`; no silent overflow anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        IntMat::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut m = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += add;
                }
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let t = a[(k, j)].clone();
                            a[(k, j)] = a[(i, j)].clone();
                            a[(i, j)] = t;
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Submatrix keeping the listed rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMat {
        IntMat::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form diagonal of an integer matrix: nonnegative
/// `d_1 | d_2 | ... | d_r` padded with zeros up to `min(rows, cols)`.
///
/// Every restart of the pivot loop strictly shrinks the pivot's absolute
/// value, so the elimination terminates.
pub fn smith_normal_form(m: &IntMat) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let r = rows.min(cols);
    let mut diag = Vec::with_capacity(r);
    let mut top = 0usize;
    'place: while top < r {
        // nonzero entry of least absolute value in the active block
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if !a[(i, j)].is_zero()
                    && pivot.map_or(true, |(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, top, pi);
        swap_cols(&mut a, top, pj);
        // clear the pivot column and row; a nonzero remainder becomes the
        // new, strictly smaller pivot
        for i in top + 1..rows {
            if a[(i, top)].is_zero() {
                continue;
            }
            let q = div_round(&a[(i, top)], &a[(top, top)]);
            row_sub(&mut a, i, top, &q);
            if !a[(i, top)].is_zero() {
                swap_rows(&mut a, top, i);
                continue 'place;
            }
        }
        for j in top + 1..cols {
            if a[(top, j)].is_zero() {
                continue;
            }
            let q = div_round(&a[(top, j)], &a[(top, top)]);
            col_sub(&mut a, j, top, &q);
            if !a[(top, j)].is_zero() {
                swap_cols(&mut a, top, j);
                continue 'place;
            }
        }
        // divisibility: fold a violating row into the pivot row and reduce
        // once, which again shrinks the pivot
        for i in top + 1..rows {
            for j in top + 1..cols {
                if (&a[(i, j)] % &a[(top, top)]).is_zero() {
                    continue;
                }
                for jj in 0..cols {
                    let add = a[(i, jj)].clone();
                    a[(top, jj)] += add;
                }
                let q = div_round(&a[(top, j)], &a[(top, top)]);
                col_sub(&mut a, j, top, &q);
                debug_assert!(!a[(top, j)].is_zero());
                swap_cols(&mut a, top, j);
                continue 'place;
            }
        }
        diag.push(a[(top, top)].abs());
        top += 1;
    }
    while diag.len() < r {
        diag.push(BigInt::zero());
    }
    diag
}

/// Invariant-factor view of an abelian group presented by `m` acting on
/// `cols` generators: (free rank, torsion factors > 1).
pub fn abelian_invariants(m: &IntMat) -> (usize, Vec<BigInt>) {
    let d = smith_normal_form(m);
    let nonzero = d.iter().filter(|x| !x.is_zero()).count();
    let free_rank = m.cols - nonzero;
    let torsion: Vec<BigInt> = d.into_iter().filter(|x| !x.is_zero() && !x.is_one()).collect();
    (free_rank, torsion)
}

fn swap_rows(a: &mut IntMat, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
}

fn swap_cols(a: &mut IntMat, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

fn row_sub(a: &mut IntMat, i: usize, from: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for c in 0..a.cols {
        let sub = q * &a[(from, c)];
        a[(i, c)] -= sub;
    }
}

fn col_sub(a: &mut IntMat, j: usize, from: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for r in 0..a.rows {
        let sub = q * &a[(r, from)];
        a[(r, j)] -= sub;
    }
}

/// Rounded division minimizing the remainder's absolute value.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a / b;
    let r = a - &q * b;
    if &r.abs() * 2 > b.abs() {
        if (r >= BigInt::zero()) == (b >= &BigInt::zero()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_i64(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMat::from_i64(rows))
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn snf_small_cases() {
        assert_eq!(snf_i64(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(snf_i64(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(snf_i64(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        // divisibility is enforced
        assert_eq!(snf_i64(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn det_examples() {
        let m = IntMat::from_i64(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.det(), BigInt::from(-2));
        let m = IntMat::from_i64(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]);
        assert_eq!(m.det(), BigInt::from(30));
        assert_eq!(IntMat::identity(4).det(), BigInt::one());
    }

    /// Row-reduction oracle: rank over the rationals and gcd of all entries
    /// agree with the SNF output's structure.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<f64>> =
            rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let nr = m.len();
        let nc = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..nc {
            if rank >= nr {
                break;
            }
            let piv = (rank..nr).max_by(|&i, &j| {
                m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap()
            });
            let Some(p) = piv else { break };
            if m[p][col].abs() < 1e-9 {
                continue;
            }
            m.swap(rank, p);
            for i in 0..nr {
                if i != rank {
                    let f = m[i][col] / m[rank][col];
                    for j in 0..nc {
                        m[i][j] -= f * m[rank][j];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn snf_matches_row_reduction_oracle_up_to_8x8() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let r = rng.gen_range(1..=8);
            let c = rng.gen_range(1..=8);
            let rows: Vec<Vec<i64>> =
                (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
            let d = snf_i64(&rows);
            let rank = d.iter().filter(|&&x| x != 0).count();
            assert_eq!(rank, rational_rank(&rows), "rank mismatch on {:?}", rows);
            // divisibility chain
            for w in d.windows(2) {
                if w[1] != 0 {
                    assert!(w[0] != 0 && w[1] % w[0] == 0, "chain broken: {:?}", d);
                }
            }
            // product of invariant factors = gcd of rank-sized minors
            let m = IntMat::from_i64(&rows);
            let k = rank;
            if k > 0 && k <= 4 {
                let mut gcd = BigInt::zero();
                let rsel = combos(r, k);
                let csel = combos(c, k);
                for rs in &rsel {
                    for cs in &csel {
                        let d = m.submatrix(rs, cs).det();
                        gcd = num_integer::gcd(gcd.clone(), d.abs());
                    }
                }
                let prod: BigInt = d[..k].iter().map(|&x| BigInt::from(x)).product();
                assert_eq!(prod, gcd, "minor-gcd mismatch on {:?}", rows);
            }
        }
    }

    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }
}
