//! Prime-field vectors: plain `u8` entries for elimination, packed words for
//! the enumeration loops (one bit per entry for `p = 2`, one byte otherwise).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::is_prime;

/// Largest alphabet supported by the packed byte lanes.
pub const MAX_PRIME: u32 = 127;

/// Arithmetic in `F_p` on `u8` residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fp {
    p: u8,
    inv: Vec<u8>,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidParameter(alloc::format!(
                "code alphabet {p} exceeds {MAX_PRIME}"
            )));
        }
        let mut inv = vec![0u8; p as usize];
        for a in 1..p {
            let b = (1..p).find(|b| a * b % p == 1).unwrap_or(1);
            inv[a as usize] = b as u8;
        }
        Ok(Fp { p: p as u8, inv })
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (s % self.p as u16) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        (a as u16 * b as u16 % self.p as u16) as u8
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn dot(&self, a: &[u8], b: &[u8]) -> u8 {
        let s: u64 = a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).sum();
        (s % self.p as u64) as u8
    }

    /// `dst += c · src`
    pub fn axpy(&self, dst: &mut [u8], c: u8, src: &[u8]) {
        if c == 0 {
            return;
        }
        for (x, &y) in dst.iter_mut().zip(src) {
            if y != 0 {
                *x = self.add(*x, self.mul(c, y));
            }
        }
    }

    pub fn scale(&self, v: &mut [u8], c: u8) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

/// Reduces rows to RREF in place, dropping zero rows; returns pivot columns.
/// `preferred` lists the columns in the order they are tried as pivots.
pub(crate) fn rref_with_order(fp: &Fp, rows: &mut Vec<Vec<u8>>, preferred: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in preferred {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = fp.inv(rows[r][c]);
        fp.scale(&mut rows[r], inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = fp.neg(row[c]);
                fp.axpy(row, f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rref(fp: &Fp, rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let order: Vec<usize> = (0..ncols).collect();
    let pivots = rref_with_order(fp, rows, &order);
    // pivot order already increasing, rows sorted by pivot
    pivots
}

const LO7: u64 = 0x7f7f_7f7f_7f7f_7f7f;
const HI: u64 = 0x8080_8080_8080_8080;
const ONES: u64 = 0x0101_0101_0101_0101;

/// Layout of packed vectors of a fixed length over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    p: u8,
    len: usize,
    words: usize,
    /// `128 - p` in every byte lane
    bias: u64,
}

impl Packing {
    pub fn new(p: u32, len: usize) -> Self {
        let words = if p == 2 {
            len.div_ceil(64)
        } else {
            len.div_ceil(8)
        };
        Packing {
            p: p as u8,
            len,
            words: words.max(1),
            bias: ONES * (128 - p as u64 % 128),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn pack(&self, v: &[u8]) -> Vec<u64> {
        let mut out = vec![0u64; self.words];
        self.pack_into(v, &mut out);
        out
    }

    pub fn pack_into(&self, v: &[u8], out: &mut [u64]) {
        out.fill(0);
        for (i, &x) in v.iter().enumerate() {
            if self.p == 2 {
                out[i / 64] |= ((x & 1) as u64) << (i % 64);
            } else {
                out[i / 8] |= (x as u64) << (8 * (i % 8));
            }
        }
    }

    pub fn unpack(&self, w: &[u64]) -> Vec<u8> {
        (0..self.len).map(|i| self.get(w, i)).collect()
    }

    pub fn get(&self, w: &[u64], i: usize) -> u8 {
        if self.p == 2 {
            ((w[i / 64] >> (i % 64)) & 1) as u8
        } else {
            (w[i / 8] >> (8 * (i % 8))) as u8
        }
    }

    /// `dst = a + b`
    #[inline]
    pub fn add(&self, dst: &mut [u64], a: &[u64], b: &[u64]) {
        if self.p == 2 {
            for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
                *d = x ^ y;
            }
        } else {
            for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
                *d = self.add_word(x, y);
            }
        }
    }

    /// `dst += a`
    #[inline]
    pub fn add_assign(&self, dst: &mut [u64], a: &[u64]) {
        if self.p == 2 {
            for (d, &x) in dst.iter_mut().zip(a) {
                *d ^= x;
            }
        } else {
            for (d, &x) in dst.iter_mut().zip(a) {
                *d = self.add_word(*d, x);
            }
        }
    }

    /// Lane-wise `(x + y) mod p`; lanes hold residues below `p ≤ 127`.
    #[inline]
    fn add_word(&self, x: u64, y: u64) -> u64 {
        let t = x + y;
        let ge = ((t + self.bias) & HI) >> 7;
        t - ge * self.p as u64
    }

    #[inline]
    pub fn weight(&self, w: &[u64]) -> usize {
        if self.p == 2 {
            w.iter().map(|x| x.count_ones() as usize).sum()
        } else {
            w.iter()
                .map(|&x| ((((x & LO7) + LO7) | x) & HI).count_ones() as usize)
                .sum()
        }
    }

    #[inline]
    pub fn is_zero(w: &[u64]) -> bool {
        w.iter().all(|&x| x == 0)
    }
}
