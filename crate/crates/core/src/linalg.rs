//! Exact integer and rational linear algebra: Bareiss rank, integer kernels
//! via Hermite reduction, row-space containment, rational solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![vec![BigRational::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("row of length {} in {cols}-column matrix", r.len())));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
            cols,
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i][j] = v;
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::from_rows(data, self.cols)
    }

    /// Each row scaled to a primitive-free integer row with the same span.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .iter()
            .map(|row| {
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Row-major CSV with a header of column labels.
    pub fn to_csv(&self, col_labels: &[String], row_labels: Option<&[String]>) -> String {
        let mut out = String::new();
        if row_labels.is_some() {
            out.push(',');
        }
        out.push_str(&col_labels.join(","));
        out.push('\n');
        for (i, row) in self.data.iter().enumerate() {
            if let Some(rl) = row_labels {
                out.push_str(&rl[i]);
                out.push(',');
            }
            out.push_str(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

/// Rank over ℚ of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for k in c + 1..ncols {
                // Bareiss step: exact division by the previous pivot.
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

pub fn rational_rank(m: &RationalMatrix) -> usize {
    integer_rank(&m.integer_rows())
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    integer_rank(&big)
}

/// `true` iff every row of `a` lies in the ℚ-row space of `b`.
pub fn rowspace_contains(a: &RationalMatrix, b: &RationalMatrix) -> Result<bool> {
    if a.cols != b.cols {
        return Err(Error::Dimension(format!(
            "column counts differ: {} vs {}",
            a.cols, b.cols
        )));
    }
    Ok(rational_rank(&b.stack(a)?) == rational_rank(b))
}

/// A ℤ-basis of `ker(A) ∩ ℤ^cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub cols: usize,
    pub vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The vectors as machine integers; errors if any entry overflows.
    pub fn to_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        x.to_i64()
                            .ok_or_else(|| Error::CapExceeded(format!("kernel entry {x} overflows i64")))
                    })
                    .collect()
            })
            .collect()
    }

    /// Membership of `v` in the ℤ-span of the basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        lattice_contains(&self.vectors, v)
    }
}

fn norm2(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

/// Row-style integer echelon form by unimodular row operations, choosing
/// pivots of minimal absolute value. Works on `m` in place and returns the
/// number of pivot rows found in the leading `width` columns.
fn integer_echelon(m: &mut [Vec<BigInt>], width: usize) -> usize {
    let nrows = m.len();
    let mut p = 0;
    for c in 0..width {
        if p == nrows {
            break;
        }
        loop {
            let best = (p..nrows)
                .filter(|&r| !m[r][c].is_zero())
                .min_by(|&x, &y| m[x][c].abs().cmp(&m[y][c].abs()).then(x.cmp(&y)));
            let Some(best) = best else { break };
            m.swap(p, best);
            let mut done = true;
            for r in p + 1..nrows {
                if m[r][c].is_zero() {
                    continue;
                }
                let q = m[r][c].div_floor(&m[p][c]);
                let (head, tail) = m.split_at_mut(r);
                let pivot = &head[p];
                for (x, y) in tail[0].iter_mut().zip(pivot.iter()) {
                    *x -= &q * y;
                }
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if (p..nrows).any(|r| !m[r][c].is_zero()) {
            if m[p][c].is_negative() {
                for x in m[p].iter_mut() {
                    *x = -&*x;
                }
            }
            p += 1;
        }
    }
    p
}

/// Integer kernel basis via Hermite reduction of `[Aᵀ | I]`.
pub fn kernel_lattice_basis(a: &[Vec<i64>], cols: usize) -> LatticeBasis {
    let r = a.len();
    let mut m: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| {
            let mut row: Vec<BigInt> = a.iter().map(|arow| BigInt::from(arow[j])).collect();
            row.extend((0..cols).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let p = integer_echelon(&mut m, r);
    let mut vectors: Vec<Vec<BigInt>> = m[p..].iter().map(|row| row[r..].to_vec()).collect();
    reduce_pairwise(&mut vectors);
    for v in vectors.iter_mut() {
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
    LatticeBasis { cols, vectors }
}

/// Greedy pairwise size reduction; keeps the lattice, shortens vectors.
fn reduce_pairwise(vs: &mut [Vec<BigInt>]) {
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 64 {
        changed = false;
        rounds += 1;
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if i == j {
                    continue;
                }
                let ni = norm2(&vs[i]);
                let plus: Vec<BigInt> = vs[i].iter().zip(&vs[j]).map(|(x, y)| x + y).collect();
                let minus: Vec<BigInt> = vs[i].iter().zip(&vs[j]).map(|(x, y)| x - y).collect();
                let (np, nm) = (norm2(&plus), norm2(&minus));
                if nm < ni && nm <= np {
                    vs[i] = minus;
                    changed = true;
                } else if np < ni {
                    vs[i] = plus;
                    changed = true;
                }
            }
        }
    }
}

/// Membership of `v` in the ℤ-span of `basis`.
pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero());
    }
    let width = v.len();
    let mut m: Vec<Vec<BigInt>> = basis.to_vec();
    let p = integer_echelon(&mut m, width);
    let mut w = v.to_vec();
    let mut row = 0;
    for c in 0..width {
        if row < p && !m[row][c].is_zero() && (0..c).all(|k| m[row][k].is_zero()) {
            let (q, rem) = w[c].div_rem(&m[row][c]);
            if !rem.is_zero() {
                return false;
            }
            for k in 0..width {
                w[k] -= &q * &m[row][k];
            }
            row += 1;
        } else if !w[c].is_zero() {
            return false;
        }
    }
    w.iter().all(|x| x.is_zero())
}

/// Reduced row echelon form over ℚ; returns the pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = m.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (a, b) = if i < r {
                    let (lo, hi) = m.split_at_mut(r);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&mut hi[0], &lo[r])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Unique solution of the square or overdetermined system `A x = b`, if any
/// solution exists and it is unique.
pub fn solve_unique(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) || pivots.len() != n {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()
    }

    fn as3() -> Vec<Vec<i64>> {
        vec![
            vec![1, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 1],
            vec![1, 0, 1, 0, 0, 0],
            vec![0, 1, 0, 0, 1, 0],
            vec![0, 0, 0, 1, 0, 1],
            vec![1, 1, 1, 1, 1, 1],
        ]
    }

    #[test]
    fn as3_rank_is_five() {
        assert_eq!(rank_i64(&as3()), 5);
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rational_rank(&RationalMatrix::identity(7)), 7);
    }

    #[test]
    fn injective_kernel_empty() {
        let id: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| (i == j) as i64).collect()).collect();
        assert!(kernel_lattice_basis(&id, 4).is_empty());
    }

    #[test]
    fn zero_row_kernel_is_everything() {
        let k = kernel_lattice_basis(&[vec![0, 0, 0]], 3);
        assert_eq!(k.len(), 3);
        for e in 0..3 {
            let mut v = vec![BigInt::zero(); 3];
            v[e] = BigInt::one();
            assert!(k.contains(&v));
        }
    }

    #[test]
    fn lattice_membership_needs_integrality() {
        let basis = big(&[vec![2, 0], vec![0, 1]]);
        assert!(lattice_contains(&basis, &[BigInt::from(4), BigInt::from(3)]));
        assert!(!lattice_contains(&basis, &[BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn non_saturated_sublattice_kernel() {
        // ker [2 4] ∩ ℤ² is spanned by (2,-1).
        let k = kernel_lattice_basis(&[vec![2, 4]], 2);
        assert_eq!(k.vectors, big(&[vec![2, -1]]));
    }

    #[test]
    fn rowspace() {
        let a = RationalMatrix::from_i64(&as3(), 6).unwrap();
        assert!(rowspace_contains(&a, &a).unwrap());
        let sub = RationalMatrix::from_i64(&[vec![1, 1, 1, 1, 1, 1]], 6).unwrap();
        assert!(rowspace_contains(&sub, &a).unwrap());
        assert!(!rowspace_contains(&a, &sub).unwrap());
        let wrong = RationalMatrix::from_i64(&[vec![1, 1]], 2).unwrap();
        assert!(rowspace_contains(&wrong, &a).is_err());
    }

    #[test]
    fn solve() {
        let r = |x: i64| BigRational::from_integer(x.into());
        let a = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        let x = solve_unique(&a, &[r(3), r(5)]).unwrap();
        assert_eq!(x, vec![BigRational::new(4.into(), 5.into()), BigRational::new(7.into(), 5.into())]);
        assert!(solve_unique(&[vec![r(1), r(1)]], &[r(1)]).is_none());
    }

    fn naive_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        rref(&mut m).len()
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in 1usize..6, cols in 1usize..8, seed in prop::collection::vec(-3i64..4, 48)) {
            let a: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 8 + j]).collect()).collect();
            let rank = rank_i64(&a);
            prop_assert_eq!(rank, naive_rank(&a));
            let k = kernel_lattice_basis(&a, cols);
            prop_assert_eq!(rank + k.len(), cols);
            for v in &k.vectors {
                for row in &a {
                    let dot: BigInt = row.iter().zip(v).map(|(&x, y)| BigInt::from(x) * y).sum();
                    prop_assert!(dot.is_zero());
                }
            }
            prop_assert_eq!(integer_rank(&k.vectors), k.len());
        }

        #[test]
        fn kernel_is_saturated(rows in 1usize..4, cols in 2usize..6, seed in prop::collection::vec(-3i64..4, 24), mult in prop::collection::vec(-2i64..3, 6)) {
            // Any integer kernel vector found by a rational route lies in the lattice.
            let a: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 6 + j]).collect()).collect();
            let k = kernel_lattice_basis(&a, cols);
            let combo: Vec<BigInt> = (0..cols)
                .map(|c| k.vectors.iter().zip(&mult).map(|(v, &m)| &v[c] * m).sum())
                .collect();
            prop_assert!(k.contains(&combo));
        }
    }
}
