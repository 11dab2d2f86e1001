use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest number of entries a matrix may hold.
///
/// The boundary matrix between vertices and edges of K_252 has 7,969,752
/// entries, so the cap sits just above that.
pub const MAX_ENTRIES: usize = 8_000_000;

#[derive(Clone, Debug)]
enum Numerators {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// Dense rational matrix stored as integer numerators over one common
/// denominator.
///
/// The representation is kept canonical: the denominator is positive, it
/// shares no factor with every numerator at once, and numerators are held
/// as `i64` whenever they all fit. Two equal matrices therefore always have
/// identical storage.
#[derive(Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    den: BigInt,
    num: Numerators,
}

pub(crate) fn check_shape(rows: usize, cols: usize) -> Result<usize> {
    match rows.checked_mul(cols) {
        Some(len) if len <= MAX_ENTRIES => Ok(len),
        _ => Err(Error::DimensionCap { rows, cols, cap: MAX_ENTRIES }),
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    (a as i128).gcd(&(b as i128)) as i64
}

impl ExactMatrix {
    fn from_parts(rows: usize, cols: usize, den: BigInt, num: Numerators) -> Self {
        let mut m = ExactMatrix { rows, cols, den, num };
        m.normalize();
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        let len = check_shape(rows, cols)?;
        Ok(ExactMatrix { rows, cols, den: BigInt::one(), num: Numerators::Small(vec![0; len]) })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| (i == j) as i64)
    }

    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| 1)
    }

    /// Integer matrix from a row-major vector.
    pub fn from_i64(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        let len = check_shape(rows, cols)?;
        if entries.len() != len {
            return Err(Error::Shape(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        Ok(ExactMatrix { rows, cols, den: BigInt::one(), num: Numerators::Small(entries) })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        let len = check_shape(rows, cols)?;
        let mut v = Vec::with_capacity(len);
        for i in 0..rows {
            for j in 0..cols {
                v.push(f(i, j));
            }
        }
        Ok(ExactMatrix { rows, cols, den: BigInt::one(), num: Numerators::Small(v) })
    }

    /// Integer numerators over a positive common denominator.
    pub fn from_bigint(rows: usize, cols: usize, entries: Vec<BigInt>, den: BigInt) -> Result<Self> {
        let len = check_shape(rows, cols)?;
        if entries.len() != len {
            return Err(Error::Shape(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        if den.is_zero() {
            return Err(Error::Parameter("zero denominator".into()));
        }
        let (den, entries) = if den.is_negative() {
            (-den, entries.into_iter().map(|x| -x).collect())
        } else {
            (den, entries)
        };
        Ok(Self::from_parts(rows, cols, den, Numerators::Big(entries)))
    }

    pub fn from_rationals(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        let len = check_shape(rows, cols)?;
        if entries.len() != len {
            return Err(Error::Shape(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        let mut den = BigInt::one();
        for e in &entries {
            if !e.denom().is_one() {
                den = den.lcm(e.denom());
            }
        }
        let nums = entries.iter().map(|e| e.numer() * (&den / e.denom())).collect();
        Ok(Self::from_parts(rows, cols, den, Numerators::Big(nums)))
    }

    /// c times the identity.
    pub fn scalar(n: usize, c: &Rational) -> Result<Self> {
        let len = check_shape(n, n)?;
        let mut v = vec![BigInt::zero(); len];
        for i in 0..n {
            v[i * n + i] = c.numer().clone();
        }
        Ok(Self::from_parts(n, n, c.denom().clone(), Numerators::Big(v)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.numer_at(i * self.cols + j), self.den.clone())
    }

    /// The entry as an `i64`, when it is an integer in range.
    pub fn get_i64(&self, i: usize, j: usize) -> Option<i64> {
        if !self.den.is_one() {
            return None;
        }
        match &self.num {
            Numerators::Small(v) => Some(v[i * self.cols + j]),
            Numerators::Big(v) => v[i * self.cols + j].to_i64(),
        }
    }

    pub fn is_nonzero_at(&self, i: usize, j: usize) -> bool {
        let k = i * self.cols + j;
        match &self.num {
            Numerators::Small(v) => v[k] != 0,
            Numerators::Big(v) => !v[k].is_zero(),
        }
    }

    fn numer_at(&self, k: usize) -> BigInt {
        match &self.num {
            Numerators::Small(v) => BigInt::from(v[k]),
            Numerators::Big(v) => v[k].clone(),
        }
    }

    /// Integer numerators, row-major. Entries equal numerator / denominator.
    pub fn numerators(&self) -> Vec<BigInt> {
        match &self.num {
            Numerators::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            Numerators::Big(v) => v.clone(),
        }
    }

    /// Row-major `i64` entries of an integral matrix whose entries fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        if !self.den.is_one() {
            return None;
        }
        match &self.num {
            Numerators::Small(v) => Some(v.clone()),
            Numerators::Big(_) => None,
        }
    }

    pub(crate) fn small_numerators(&self) -> Option<&[i64]> {
        match &self.num {
            Numerators::Small(v) => Some(v),
            Numerators::Big(_) => None,
        }
    }

    pub fn entries(&self) -> Vec<Rational> {
        (0..self.rows * self.cols).map(|k| Rational::new(self.numer_at(k), self.den.clone())).collect()
    }

    fn normalize(&mut self) {
        if !self.den.is_one() {
            match &mut self.num {
                Numerators::Small(v) => {
                    if let Some(d) = self.den.to_i64() {
                        let mut g = d;
                        for &x in v.iter() {
                            if x != 0 {
                                g = gcd_i64(g, x);
                                if g == 1 {
                                    break;
                                }
                            }
                        }
                        if g > 1 {
                            v.iter_mut().for_each(|x| *x /= g);
                            self.den = BigInt::from(d / g);
                        }
                    } else {
                        let mut g = self.den.clone();
                        for &x in v.iter() {
                            if x != 0 {
                                g = g.gcd(&BigInt::from(x));
                                if g.is_one() {
                                    break;
                                }
                            }
                        }
                        if !g.is_one() {
                            let g64 = g.to_i64().expect("gcd divides an i64");
                            v.iter_mut().for_each(|x| *x /= g64);
                            self.den = &self.den / &g;
                        }
                    }
                }
                Numerators::Big(v) => {
                    let mut g = self.den.clone();
                    for x in v.iter() {
                        if !x.is_zero() {
                            g = g.gcd(x);
                            if g.is_one() {
                                break;
                            }
                        }
                    }
                    if !g.is_one() {
                        v.iter_mut().for_each(|x| *x = &*x / &g);
                        self.den = &self.den / &g;
                    }
                }
            }
        }
        if self.num_all_zero() {
            self.den = BigInt::one();
        }
        if let Numerators::Big(v) = &self.num {
            let small: Option<Vec<i64>> = v.iter().map(|x| x.to_i64()).collect();
            if let Some(s) = small {
                self.num = Numerators::Small(s);
            }
        }
    }

    fn num_all_zero(&self) -> bool {
        match &self.num {
            Numerators::Small(v) => v.iter().all(|&x| x == 0),
            Numerators::Big(v) => v.iter().all(|x| x.is_zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num_all_zero()
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.rows, self.cols);
        let num = match &self.num {
            Numerators::Small(v) => {
                let mut t = vec![0i64; r * c];
                for i in 0..r {
                    for j in 0..c {
                        t[j * r + i] = v[i * c + j];
                    }
                }
                Numerators::Small(t)
            }
            Numerators::Big(v) => {
                let mut t = vec![BigInt::zero(); r * c];
                for i in 0..r {
                    for j in 0..c {
                        t[j * r + i] = v[i * c + j].clone();
                    }
                }
                Numerators::Big(t)
            }
        };
        ExactMatrix { rows: c, cols: r, den: self.den.clone(), num }
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        match &self.num {
            Numerators::Small(v) => (0..n).all(|i| (i + 1..n).all(|j| v[i * n + j] == v[j * n + i])),
            Numerators::Big(v) => (0..n).all(|i| (i + 1..n).all(|j| v[i * n + j] == v[j * n + i])),
        }
    }

    pub fn trace(&self) -> Rational {
        let n = self.rows.min(self.cols);
        let s: BigInt = (0..n).map(|i| self.numer_at(i * self.cols + i)).sum();
        Rational::new(s, self.den.clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        check_shape(self.rows, other.cols)?;
        let den = &self.den * &other.den;
        if let (Numerators::Small(a), Numerators::Small(b)) = (&self.num, &other.num) {
            if let Some(v) = mul_small(a, b, self.rows, self.cols, other.cols) {
                return Ok(Self::from_parts(self.rows, other.cols, den, Numerators::Small(v)));
            }
        }
        let a = self.numerators();
        let b = other.numerators();
        let v = mul_big(&a, &b, self.rows, self.cols, other.cols);
        Ok(Self::from_parts(self.rows, other.cols, den, Numerators::Big(v)))
    }

    fn same_shape(&self, other: &ExactMatrix, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot {} {}x{} and {}x{}",
                what, self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &ExactMatrix, sign: i64) -> ExactMatrix {
        if self.den == other.den {
            if let (Numerators::Small(a), Numerators::Small(b)) = (&self.num, &other.num) {
                let v: Option<Vec<i64>> = a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| y.checked_mul(sign).and_then(|y| x.checked_add(y)))
                    .collect();
                if let Some(v) = v {
                    return Self::from_parts(self.rows, self.cols, self.den.clone(), Numerators::Small(v));
                }
            }
        }
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den * BigInt::from(sign);
        let a = self.numerators();
        let b = other.numerators();
        let v = a.iter().zip(&b).map(|(x, y)| x * &fa + y * &fb).collect();
        Self::from_parts(self.rows, self.cols, l, Numerators::Big(v))
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_shape(other, "add")?;
        Ok(self.combine(other, 1))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_shape(other, "subtract")?;
        Ok(self.combine(other, -1))
    }

    pub fn scale(&self, c: &Rational) -> ExactMatrix {
        let p = c.numer();
        let den = &self.den * c.denom();
        let v = match (&self.num, p.to_i64()) {
            (Numerators::Small(a), Some(p)) => {
                let s: Option<Vec<i64>> = a.iter().map(|&x| x.checked_mul(p)).collect();
                match s {
                    Some(s) => return Self::from_parts(self.rows, self.cols, den, Numerators::Small(s)),
                    None => self.numerators().into_iter().map(|x| x * p).collect(),
                }
            }
            _ => self.numerators().into_iter().map(|x| x * p).collect(),
        };
        Self::from_parts(self.rows, self.cols, den, Numerators::Big(v))
    }

    pub fn scale_int(&self, c: i64) -> ExactMatrix {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// M + cI.
    pub fn add_identity(&self, c: &Rational) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.combine(&ExactMatrix::scalar(self.rows, c)?, 1))
    }

    pub fn add_identity_int(&self, c: i64) -> Result<ExactMatrix> {
        self.add_identity(&Rational::from_integer(BigInt::from(c)))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let num = match &self.num {
            Numerators::Small(v) => Numerators::Small(
                rows.iter().flat_map(|&i| cols.iter().map(move |&j| v[i * self.cols + j])).collect(),
            ),
            Numerators::Big(v) => Numerators::Big(
                rows.iter().flat_map(|&i| cols.iter().map(move |&j| v[i * self.cols + j].clone())).collect(),
            ),
        };
        Self::from_parts(rows.len(), cols.len(), self.den.clone(), num)
    }

    /// Assemble a block matrix. Every block in a row must share its row count
    /// and every block in a column its column count.
    pub fn block(blocks: &[&[&ExactMatrix]]) -> Result<ExactMatrix> {
        if blocks.is_empty() || blocks[0].is_empty() {
            return ExactMatrix::zeros(0, 0);
        }
        let width = blocks[0].len();
        let col_sizes: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut rows = 0;
        let mut den = BigInt::one();
        for row in blocks {
            if row.len() != width {
                return Err(Error::Shape("ragged block layout".into()));
            }
            let h = row[0].rows;
            for (b, &w) in row.iter().zip(&col_sizes) {
                if b.rows != h || b.cols != w {
                    return Err(Error::Shape(format!("block {}x{} does not fit", b.rows, b.cols)));
                }
                den = den.lcm(&b.den);
            }
            rows += h;
        }
        let cols: usize = col_sizes.iter().sum();
        check_shape(rows, cols)?;
        let mut v = Vec::with_capacity(rows * cols);
        for row in blocks {
            let factors: Vec<BigInt> = row.iter().map(|b| &den / &b.den).collect();
            for i in 0..row[0].rows {
                for (b, f) in row.iter().zip(&factors) {
                    for j in 0..b.cols {
                        v.push(b.numer_at(i * b.cols + j) * f);
                    }
                }
            }
        }
        Ok(Self::from_parts(rows, cols, den, Numerators::Big(v)))
    }

    pub fn kronecker(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        check_shape(rows, cols)?;
        let den = &self.den * &other.den;
        if let (Numerators::Small(a), Numerators::Small(b)) = (&self.num, &other.num) {
            let mut v = Vec::with_capacity(rows * cols);
            let mut ok = true;
            'outer: for i in 0..self.rows {
                for k in 0..other.rows {
                    for j in 0..self.cols {
                        for l in 0..other.cols {
                            match a[i * self.cols + j].checked_mul(b[k * other.cols + l]) {
                                Some(x) => v.push(x),
                                None => {
                                    ok = false;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            if ok {
                return Ok(Self::from_parts(rows, cols, den, Numerators::Small(v)));
            }
        }
        let mut v = Vec::with_capacity(rows * cols);
        for i in 0..self.rows {
            for k in 0..other.rows {
                for j in 0..self.cols {
                    let x = self.numer_at(i * self.cols + j);
                    for l in 0..other.cols {
                        v.push(&x * other.numer_at(k * other.cols + l));
                    }
                }
            }
        }
        Ok(Self::from_parts(rows, cols, den, Numerators::Big(v)))
    }

    /// Matrix power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Result<ExactMatrix> {
        let mut acc = ExactMatrix::identity(self.rows)?;
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reduce an integral matrix modulo a prime.
    pub fn mod_p(&self, p: u32) -> Result<crate::linalg::PrimeFieldMatrix> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let residues = match &self.num {
            Numerators::Small(v) => v.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect(),
            Numerators::Big(v) => {
                let bp = BigInt::from(p);
                v.iter().map(|x| x.mod_floor(&bp).to_u32().unwrap()).collect()
            }
        };
        crate::linalg::PrimeFieldMatrix::new(p, self.rows, self.cols, residues)
    }
}

fn mul_small(a: &[i64], b: &[i64], r: usize, k: usize, c: usize) -> Option<Vec<i64>> {
    let brows: Vec<Vec<(usize, i64)>> = (0..k)
        .map(|t| (0..c).filter_map(|j| {
            let y = b[t * c + j];
            (y != 0).then_some((j, y))
        }).collect())
        .collect();
    let mut out = vec![0i64; r * c];
    let mut acc = vec![0i128; c];
    for i in 0..r {
        acc.iter_mut().for_each(|x| *x = 0);
        for t in 0..k {
            let x = a[i * k + t];
            if x == 0 {
                continue;
            }
            let x = x as i128;
            for &(j, y) in &brows[t] {
                acc[j] = acc[j].checked_add(x * y as i128)?;
            }
        }
        for j in 0..c {
            out[i * c + j] = i64::try_from(acc[j]).ok()?;
        }
    }
    Some(out)
}

fn mul_big(a: &[BigInt], b: &[BigInt], r: usize, k: usize, c: usize) -> Vec<BigInt> {
    let brows: Vec<Vec<(usize, &BigInt)>> = (0..k)
        .map(|t| (0..c).filter_map(|j| {
            let y = &b[t * c + j];
            (!y.is_zero()).then_some((j, y))
        }).collect())
        .collect();
    let mut out = Vec::with_capacity(r * c);
    for i in 0..r {
        let mut acc = vec![BigInt::zero(); c];
        for t in 0..k {
            let x = &a[i * k + t];
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &brows[t] {
                acc[j] += x * y;
            }
        }
        out.extend(acc);
    }
    out
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols || self.den != other.den {
            return false;
        }
        match (&self.num, &other.num) {
            (Numerators::Small(a), Numerators::Small(b)) => a == b,
            (Numerators::Big(a), Numerators::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for ExactMatrix {}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows.min(12) {
            write!(f, " ")?;
            for j in 0..self.cols.min(12) {
                write!(f, " {}", self.entry(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
