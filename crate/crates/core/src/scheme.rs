// SPDX-License-Identifier: Apache-2.0

//! Intersection arrays of distance-regular graphs.
//!
//! An array `{b_0, ..., b_{d-1}; c_1, ..., c_d}` determines every other
//! combinatorial parameter: `a_i = b_0 - b_i - c_i` and the degrees
//! `k_{i+1} = k_i b_i / c_{i+1}`. All arithmetic is exact on `u64`/`i64`
//! with checked overflow.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The parameter list `{b_0, ..., b_{d-1}; c_1, ..., c_d}`.
///
/// Construction only checks the shape of the array (`c_1 = 1`, all listed
/// entries positive, equal lengths). Use [`IntersectionArray::derive`] to
/// check the counting conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

/// Parameters that follow from an intersection array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedParams {
    /// `a_0, ..., a_d`.
    pub a: Vec<u64>,
    /// `k_0, ..., k_d`.
    pub k: Vec<u64>,
    pub n_vertices: u64,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::MalformedArray("diameter must be at least 1".into()));
        }
        if b.len() != c.len() {
            return Err(Error::MalformedArray(format!(
                "b has {} entries but c has {}",
                b.len(),
                c.len()
            )));
        }
        if c[0] != 1 {
            return Err(Error::MalformedArray(format!("c_1 must be 1, got {}", c[0])));
        }
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return Err(Error::MalformedArray(format!("b_{i} must be positive")));
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return Err(Error::MalformedArray(format!("c_{} must be positive", i + 1)));
        }
        Ok(Self { b, c })
    }

    /// Diameter `d`.
    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// `b_0, ..., b_{d-1}`.
    pub fn b(&self) -> &[u64] {
        &self.b
    }

    /// `c_1, ..., c_d`.
    pub fn c(&self) -> &[u64] {
        &self.c
    }

    /// `b_i` with the convention `b_d = 0`.
    pub fn b_at(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` with the convention `c_0 = 0`.
    pub fn c_at(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// Valency `k = b_0`.
    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// Computes `a_i`, `k_i` and the vertex count, rejecting arrays that
    /// cannot belong to a distance-regular graph.
    pub fn derive(&self) -> Result<DerivedParams> {
        let d = self.diameter();
        let b0 = self.valency();
        let mut a = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let value = b0 as i128 - self.b_at(i) as i128 - self.c_at(i) as i128;
            if value < 0 {
                return Err(Error::NegativeIntersectionNumber {
                    index: i,
                    value: value.max(i64::MIN as i128) as i64,
                });
            }
            a.push(value as u64);
        }

        let mut k = Vec::with_capacity(d + 1);
        k.push(1u64);
        for i in 0..d {
            let num = k[i]
                .checked_mul(self.b[i])
                .ok_or(Error::Overflow("vertex degrees"))?;
            if num % self.c[i] != 0 {
                return Err(Error::NonIntegralDegree { index: i + 1, prev: i });
            }
            k.push(num / self.c[i]);
        }
        let n_vertices = k
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("vertex count"))?;
        Ok(DerivedParams { a, k, n_vertices })
    }
}

impl fmt::Display for IntersectionArray {
    /// Writes the `b0,b1,...;c1,c2,...` form accepted by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |message: String| Error::Parse { line: None, message };
        let (bs, cs) = s
            .split_once(';')
            .ok_or_else(|| parse_err(format!("expected `b0,...;c1,...`, got {s:?}")))?;
        let parse_list = |part: &str| -> Result<Vec<u64>> {
            part.split(',')
                .map(|tok| {
                    tok.parse::<u64>()
                        .map_err(|e| parse_err(format!("bad entry {tok:?}: {e}")))
                })
                .collect()
        };
        let array = Self::new(parse_list(bs)?, parse_list(cs)?)?;
        array.derive()?;
        Ok(array)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Hamming graph `H(q, n)`: `b_i = (n - i)(q - 1)`, `c_i = i`.
pub fn hamming_array(q: u64, n: u64) -> Result<IntersectionArray> {
    if q < 2 || n < 1 {
        return Err(Error::InvalidParameters(format!(
            "H(q, n) needs q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    let n_us = usize::try_from(n).map_err(|_| Error::Overflow("diameter"))?;
    let mut b = Vec::with_capacity(n_us);
    let mut c = Vec::with_capacity(n_us);
    for i in 0..n {
        b.push((n - i).checked_mul(q - 1).ok_or(Error::Overflow("b_i"))?);
        c.push(i + 1);
    }
    let array = IntersectionArray::new(b, c)?;
    array.derive()?;
    Ok(array)
}

/// Johnson graph `J(v, n)`: `b_i = (n - i)(v - n - i)`, `c_i = i^2`.
pub fn johnson_array(v: u64, n: u64) -> Result<IntersectionArray> {
    if n < 1 || v < n.saturating_mul(2) {
        return Err(Error::InvalidParameters(format!(
            "J(v, n) needs v >= 2n >= 2, got v={v}, n={n}"
        )));
    }
    let n_us = usize::try_from(n).map_err(|_| Error::Overflow("diameter"))?;
    let mut b = Vec::with_capacity(n_us);
    let mut c = Vec::with_capacity(n_us);
    for i in 0..n {
        b.push(
            (n - i)
                .checked_mul(v - n - i)
                .ok_or(Error::Overflow("b_i"))?,
        );
        c.push((i + 1).checked_mul(i + 1).ok_or(Error::Overflow("c_i"))?);
    }
    let array = IntersectionArray::new(b, c)?;
    array.derive()?;
    Ok(array)
}

/// Connected strongly regular graph with parameters `(nu, k, lambda, mu)`,
/// i.e. the diameter-2 array `{k, k - 1 - lambda; 1, mu}`.
pub fn srg_array(nu: u64, k: u64, lambda: u64, mu: u64) -> Result<IntersectionArray> {
    if mu == 0 {
        return Err(Error::InvalidParameters(
            "mu = 0 describes a disjoint union of cliques, not a diameter-2 graph".into(),
        ));
    }
    if k == 0 || lambda >= k {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and lambda <= k - 1, got k={k}, lambda={lambda}"
        )));
    }
    if nu < k + 2 {
        return Err(Error::InvalidParameters(format!(
            "a diameter-2 graph needs nu >= k + 2, got nu={nu}, k={k}"
        )));
    }
    let b1 = k - 1 - lambda;
    let lhs = k.checked_mul(b1).ok_or(Error::Overflow("k(k-1-lambda)"))?;
    let rhs = mu
        .checked_mul(nu - k - 1)
        .ok_or(Error::Overflow("mu(nu-k-1)"))?;
    if lhs != rhs {
        return Err(Error::InfeasibleParameters(format!(
            "k(k-1-lambda) = {lhs} but mu(nu-k-1) = {rhs} for ({nu},{k},{lambda},{mu})"
        )));
    }
    if b1 == 0 {
        return Err(Error::InfeasibleParameters(format!(
            "lambda = k - 1 leaves no vertices at distance 2 for ({nu},{k},{lambda},{mu})"
        )));
    }
    let array = IntersectionArray::new(vec![k, b1], vec![1, mu]).map_err(|e| {
        Error::InfeasibleParameters(format!("({nu},{k},{lambda},{mu}): {e}"))
    })?;
    let derived = array.derive().map_err(|e| match e {
        Error::Overflow(_) => e,
        other => Error::InfeasibleParameters(format!("({nu},{k},{lambda},{mu}): {other}")),
    })?;
    if derived.k[2] != nu - k - 1 {
        return Err(Error::InfeasibleParameters(format!(
            "k_2 = {} differs from nu - k - 1 = {}",
            derived.k[2],
            nu - k - 1
        )));
    }
    Ok(array)
}

/// Exact binomial coefficient, `None` on overflow.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}
