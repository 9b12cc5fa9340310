//! Exact feasibility of `A y = b, y >= 0` by phase-one simplex with Bland's
//! rule.
//!
//! The tableau is first run over `Ratio<i128>` with checked arithmetic and
//! rerun over `BigRational` if anything overflows. Artificial variables are
//! kept implicit: a row whose basic variable is still artificial contributes
//! to the phase-one objective, and artificials never re-enter once they
//! leave.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

type Small = Ratio<i128>;

trait Field: Clone + PartialOrd + Zero + One + Signed {
    fn from_i64(v: i64) -> Self;
    fn add_(&self, o: &Self) -> Option<Self>;
    fn sub_(&self, o: &Self) -> Option<Self>;
    fn mul_(&self, o: &Self) -> Option<Self>;
    fn div_(&self, o: &Self) -> Option<Self>;
}

impl Field for Small {
    fn from_i64(v: i64) -> Self {
        Small::from_integer(v as i128)
    }
    fn add_(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add_(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// A system `A y = b` with sparse integer rows.
#[derive(Debug, Clone, Default)]
pub struct EqualitySystem {
    pub columns: usize,
    pub rows: Vec<(Vec<(usize, i64)>, i64)>,
}

impl EqualitySystem {
    pub fn new(columns: usize) -> Self {
        EqualitySystem { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, coeffs: Vec<(usize, i64)>, rhs: i64) {
        self.rows.push((coeffs, rhs));
    }
}

/// Whether some `y >= 0` satisfies every row.
pub fn feasible(sys: &EqualitySystem) -> bool {
    match run::<Small>(sys) {
        Some(answer) => answer,
        None => run::<BigRational>(sys).expect("big rationals never overflow"),
    }
}

fn run<T: Field>(sys: &EqualitySystem) -> Option<bool> {
    let n = sys.columns;
    let m = sys.rows.len();
    // row-major tableau with the right-hand side in the last column
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
    for (coeffs, rhs) in &sys.rows {
        let mut row = vec![T::zero(); n + 1];
        for &(j, v) in coeffs {
            row[j] = row[j].add_(&T::from_i64(v))?;
        }
        row[n] = T::from_i64(*rhs);
        if row[n].is_negative() {
            for x in &mut row {
                *x = -x.clone();
            }
        }
        tab.push(row);
    }
    // None while the artificial variable of the row is basic
    let mut basis: Vec<Option<usize>> = vec![None; m];

    loop {
        // reduced phase-one costs: minus the sum of artificial rows
        let mut entering = None;
        for j in 0..n {
            let mut d = T::zero();
            for (i, row) in tab.iter().enumerate() {
                if basis[i].is_none() && !row[j].is_zero() {
                    d = d.sub_(&row[j])?;
                }
            }
            if d.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else {
            let infeasibility = tab
                .iter()
                .zip(&basis)
                .filter(|(_, b)| b.is_none())
                .try_fold(T::zero(), |acc, (row, _)| acc.add_(&row[n]))?;
            return Some(infeasibility.is_zero());
        };

        // ratio test; ties broken by the smallest basic variable index,
        // counting artificials before structural columns
        let mut leave: Option<(usize, T)> = None;
        let key = |b: Option<usize>, i: usize| match b {
            None => i,
            Some(v) => m + v,
        };
        for (i, row) in tab.iter().enumerate() {
            if !row[j].is_positive() {
                continue;
            }
            let ratio = row[n].div_(&row[j])?;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && key(basis[i], i) < key(basis[*li], *li)),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("phase one is bounded below");

        let piv = tab[r][j].clone();
        for x in tab[r].iter_mut() {
            if !x.is_zero() {
                *x = x.div_(&piv)?;
            }
        }
        let pivot_row = tab[r].clone();
        let nonzero: Vec<usize> = (0..=n).filter(|&k| !pivot_row[k].is_zero()).collect();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for &k in &nonzero {
                row[k] = row[k].sub_(&f.mul_(&pivot_row[k])?)?;
            }
        }
        basis[r] = Some(j);
    }
}
