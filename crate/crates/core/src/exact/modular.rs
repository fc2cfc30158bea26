//! Arithmetic modulo word-size primes and a certified rational kernel solver.
//!
//! [`certified_kernel`] row-reduces an integer matrix modulo a sequence of
//! 31-bit primes, lifts the reduced kernel basis by Chinese remaindering and
//! rational reconstruction, and accepts the lift only after checking
//! `M * k = 0` over the integers for every vector. Because the rank modulo a
//! prime never exceeds the rank over Q, a verified lift with as many vectors
//! as the modular kernel is exactly the rational kernel.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod_u128(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Primes below 2^31 in descending order.
pub fn large_primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..(1u64 << 31))
        .rev()
        .filter(|&n| is_prime_u64(n))
}

/// Arithmetic in Z/p for a prime p < 2^32.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 32)).contains(&p), "modulus must fit in 32 bits");
        Self { p }
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn from_integer(self, v: &Integer) -> u64 {
        let r = v.mod_floor(&Integer::from(self.p));
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    }
}

/// In-place reduced row echelon form modulo p. Returns the pivot columns.
pub fn rref_mod(rows: &mut Vec<Vec<u64>>, cols: usize, f: Zp) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for v in rows[r][c..].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            let neg = f.p - factor;
            for (dst, &src) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if src != 0 {
                    *dst = (*dst + neg * src) % f.p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of an integer matrix modulo p.
pub fn rank_mod(rows: &[Vec<Integer>], cols: usize, p: u64) -> usize {
    let f = Zp::new(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| f.from_integer(v)).collect())
        .collect();
    rref_mod(&mut m, cols, f).len()
}

/// Sparse integer matrix, one list of `(column, value)` pairs per row.
#[derive(Clone, Debug, Default)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, Integer)>>,
}

impl IntMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<(usize, Integer)>] {
        &self.rows
    }

    /// Appends a row; zero entries are dropped and an all-zero row is ignored.
    pub fn push_row(&mut self, mut row: Vec<(usize, Integer)>) {
        row.retain(|(c, v)| {
            debug_assert!(*c < self.cols);
            !v.is_zero()
        });
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    fn reduce(&self, f: Zp) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![0u64; self.cols];
                for (c, v) in row {
                    dense[*c] = f.add(dense[*c], f.from_integer(v));
                }
                dense
            })
            .collect()
    }

    /// True when every row annihilates the integer vector `v`.
    pub fn annihilates(&self, v: &[Integer]) -> bool {
        self.rows.iter().all(|row| {
            row.iter()
                .filter(|(c, _)| !v[*c].is_zero())
                .fold(Integer::zero(), |acc, (c, a)| acc + a * &v[*c])
                .is_zero()
        })
    }
}

/// Exact basis of the right null space of `m`, in the standard form of its
/// reduced echelon form: one vector per free column with a 1 there and 0 at
/// the other free columns.
pub fn certified_kernel(m: &IntMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols;
    if m.rows.is_empty() {
        return (0..cols).map(|c| unit(cols, c)).collect();
    }

    let mut state: Option<LiftState> = None;
    let mut attempts_at = 1usize;
    for p in large_primes().take(4000) {
        let f = Zp::new(p);
        let mut red = m.reduce(f);
        let pivots = rref_mod(&mut red, cols, f);
        if pivots.len() == cols {
            return Vec::new();
        }
        let free: Vec<usize> = free_columns(&pivots, cols);
        // Entries of kernel vectors at pivot positions: -R[i][free].
        let residues: Vec<Vec<u64>> = free
            .iter()
            .map(|&fc| red.iter().map(|row| f.sub(0, row[fc])).collect())
            .collect();

        match &mut state {
            Some(s) if s.pivots == pivots => s.absorb(&residues, p),
            // A prime that drops rank or shifts pivots right is unlucky.
            Some(s) if !better_profile(&pivots, &s.pivots) => continue,
            _ => state = Some(LiftState::new(pivots, free, residues, p)),
        }

        let s = state.as_mut().expect("state initialised");
        s.primes_used += 1;
        if s.primes_used < attempts_at {
            continue;
        }
        attempts_at = s.primes_used + s.primes_used.div_ceil(2);
        if let Some(kernel) = s.try_lift(cols) {
            if kernel.iter().all(|k| m.annihilates(&clear_denominators(k))) {
                return kernel;
            }
        }
    }
    panic!("certified_kernel: rational reconstruction did not stabilise");
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn free_columns(pivots: &[usize], cols: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

/// Whether `cand` has a higher rank profile than `cur`: more pivots, or the
/// same number with the first difference further left.
fn better_profile(cand: &[usize], cur: &[usize]) -> bool {
    if cand.len() != cur.len() {
        return cand.len() > cur.len();
    }
    cand < cur
}

struct LiftState {
    pivots: Vec<usize>,
    free: Vec<usize>,
    residues: Vec<Vec<Integer>>,
    modulus: Integer,
    primes_used: usize,
}

impl LiftState {
    fn new(pivots: Vec<usize>, free: Vec<usize>, residues: Vec<Vec<u64>>, p: u64) -> Self {
        Self {
            pivots,
            free,
            residues: residues
                .into_iter()
                .map(|r| r.into_iter().map(Integer::from).collect())
                .collect(),
            modulus: Integer::from(p),
            primes_used: 0,
        }
    }

    fn absorb(&mut self, residues: &[Vec<u64>], p: u64) {
        // x = a mod M, x = b mod p  ->  x = a + M * ((b - a) * M^-1 mod p)
        let f = Zp::new(p);
        let m_inv = f.inv(f.from_integer(&self.modulus));
        for (acc_row, new_row) in self.residues.iter_mut().zip(residues) {
            for (a, &b) in acc_row.iter_mut().zip(new_row) {
                let t = f.mul(f.sub(b, f.from_integer(a)), m_inv);
                if t != 0 {
                    *a += &self.modulus * Integer::from(t);
                }
            }
        }
        self.modulus *= Integer::from(p);
    }

    fn try_lift(&self, cols: usize) -> Option<Vec<Vec<Rational>>> {
        let bound = (&self.modulus / Integer::from(2)).sqrt();
        let mut out = Vec::with_capacity(self.free.len());
        for (fc, row) in self.free.iter().zip(&self.residues) {
            let mut v = vec![Rational::zero(); cols];
            v[*fc] = Rational::one();
            for (&pc, a) in self.pivots.iter().zip(row) {
                v[pc] = rational_reconstruction(a, &self.modulus, &bound)?;
            }
            out.push(v);
        }
        Some(out)
    }
}

/// Finds n/d with |n|, d <= bound and n = a d (mod m), if one exists.
pub fn rational_reconstruction(a: &Integer, m: &Integer, bound: &Integer) -> Option<Rational> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return Some(Rational::zero());
    }
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (Integer::zero(), Integer::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || &t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Multiplies a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[Rational]) -> Vec<Integer> {
    let den = super::common_denominator(v);
    v.iter()
        .map(|x| {
            let scaled = x * Rational::from_integer(den.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect()
}
