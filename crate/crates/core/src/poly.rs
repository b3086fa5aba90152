//! Sparse multivariate polynomial and truncated power-series arithmetic over
//! exact rationals.
//!
//! Exponent vectors are integers, so Laurent monomials are first-class; the
//! canonical term order everywhere is graded lexicographic (total degree
//! first, then lex), ascending. Key operations:
//!
//! - [`shift_expand`]: the expansion of `Π (1+u_i)^{p_i}` with generalized
//!   binomial coefficients (negative exponents allowed);
//! - [`exp_expand`]: the expansion of `e^{a·x}`;
//! - [`MultiPoly::lowest_part`]: lowest-degree nonzero homogeneous component;
//! - [`apply_diff`]: the apolarity action `f(∂) g`;
//! - [`divide_exact`]: exact division test by a single divisor;
//! - [`expand_at_ones`] / [`vanishing_order`]: expansion of a Laurent
//!   polynomial around the all-ones point and its valuation there.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{parse_rational, rational_to_string, Rational};

/// Exponent vector with the graded-lexicographic order (ascending): compare
/// total degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial: map from exponent vectors to nonzero
/// rational coefficients. Exponents may be negative (Laurent form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    /// The monomial `c * x^exps`.
    pub fn monomial(dim: usize, exps: Vec<i64>, c: Rational) -> Self {
        assert_eq!(exps.len(), dim);
        let mut p = Self::zero(dim);
        p.add_term(exps, c);
        p
    }

    /// The single variable `x_i`.
    pub fn var(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut exps = vec![0; dim];
        exps[i] = 1;
        Self::monomial(dim, exps, Rational::one())
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, Rational)>,
    {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Add `c * x^exps`, dropping the term if the sum cancels to zero.
    pub fn add_term(&mut self, exps: Vec<i64>, c: Rational) {
        assert_eq!(exps.len(), self.dim, "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.0.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.dim);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s.clone();
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = MultiPoly::zero(self.dim);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let exps: Vec<i64> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial `x^delta` (shift all exponents).
    pub fn shifted_by(&self, delta: &[i64]) -> MultiPoly {
        assert_eq!(delta.len(), self.dim);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    m.0.iter().zip(delta).map(|(a, d)| a + d).collect(),
                    c.clone(),
                )
            })
            .collect::<Vec<_>>();
        MultiPoly::from_terms(self.dim, terms)
    }

    /// Componentwise minimum exponent over the support. `None` for zero.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut mins = vec![i64::MAX; self.dim];
        for (m, _) in self.terms() {
            for (lo, &e) in mins.iter_mut().zip(&m.0) {
                *lo = (*lo).min(e);
            }
        }
        Some(mins)
    }

    /// Maximum total degree over the support. `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// All exponents nonnegative (honest polynomial, not Laurent)?
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    pub fn homogeneous_component(&self, d: i64) -> MultiPoly {
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.total_degree() == d)
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect();
        MultiPoly::from_terms(self.dim, terms)
    }

    /// Lowest-degree nonzero homogeneous component, with its degree.
    /// `None` for the zero polynomial.
    pub fn lowest_part(&self) -> Option<(i64, MultiPoly)> {
        let d = self.terms.keys().next()?.total_degree();
        Some((d, self.homogeneous_component(d)))
    }

    /// Substitute `x_var := value`. For negative exponents the value must be
    /// nonzero.
    pub fn substitute_one(&self, var: usize, value: &Rational) -> MultiPoly {
        assert!(var < self.dim);
        let mut out = MultiPoly::zero(self.dim);
        for (m, c) in self.terms() {
            let e = m.0[var];
            let factor = rational_pow(value, e);
            let mut exps = m.0.clone();
            exps[var] = 0;
            out.add_term(exps, c * factor);
        }
        out
    }

    /// Serialize as a list of `{exponents, coefficient}` objects in canonical
    /// term order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(m, c)| {
                    serde_json::json!({
                        "exponents": m.0,
                        "coefficient": rational_to_string(c),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(dim: usize, v: &serde_json::Value) -> Option<MultiPoly> {
        let arr = v.as_array()?;
        let mut p = MultiPoly::zero(dim);
        for t in arr {
            let exps: Vec<i64> = t
                .get("exponents")?
                .as_array()?
                .iter()
                .map(|e| e.as_i64())
                .collect::<Option<_>>()?;
            if exps.len() != dim {
                return None;
            }
            let c = parse_rational(t.get("coefficient")?.as_str()?).ok()?;
            p.add_term(exps, c);
        }
        Some(p)
    }
}

fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    assert!(
        exp > 0 || !base.is_zero(),
        "negative power of zero in substitution"
    );
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base.clone();
    }
    if exp < 0 {
        acc = acc.recip();
    }
    acc
}

fn var_names(dim: usize) -> Vec<String> {
    match dim {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=dim).map(|i| format!("x{i}")).collect(),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = var_names(self.dim);
        let mut first = true;
        // Descending order reads naturally (leading term first).
        for (m, c) in self.terms.iter().rev() {
            let is_const = m.0.iter().all(|&e| e == 0);
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || is_const {
                factors.push(rational_to_string(&mag));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(names[i].clone());
                } else {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Power series truncated at a total-degree cutoff; arithmetic re-truncates
/// to the smaller cutoff of the operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cutoff: i64,
    poly: MultiPoly,
}

impl TruncatedSeries {
    pub fn new(cutoff: i64, poly: MultiPoly) -> Self {
        assert!(cutoff >= 0);
        assert!(poly.is_polynomial(), "series terms must have exponents >= 0");
        let truncated = truncate(&poly, cutoff);
        Self {
            cutoff,
            poly: truncated,
        }
    }

    pub fn zero(dim: usize, cutoff: i64) -> Self {
        Self::new(cutoff, MultiPoly::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(self.cutoff.min(other.cutoff), self.poly.add(&other.poly))
    }

    pub fn scale(&self, s: &Rational) -> TruncatedSeries {
        TruncatedSeries::new(self.cutoff, self.poly.scale(s))
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(self.cutoff.min(other.cutoff), self.poly.mul(&other.poly))
    }

    /// Lowest nonzero homogeneous part of the truncated data. `None` when all
    /// retained coefficients vanish.
    pub fn lowest_part(&self) -> Option<(i64, MultiPoly)> {
        self.poly.lowest_part()
    }
}

fn truncate(p: &MultiPoly, cutoff: i64) -> MultiPoly {
    let terms: Vec<_> = p
        .terms()
        .filter(|(m, _)| m.total_degree() <= cutoff)
        .map(|(m, c)| (m.0.clone(), c.clone()))
        .collect();
    MultiPoly::from_terms(p.dim(), terms)
}

/// Generalized binomial coefficient `C(p, k)` for any integer `p`:
/// `p (p-1) ... (p-k+1) / k!`. Always an integer.
pub fn binom_int(p: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(p) - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    // Exact: a product of k consecutive integers is divisible by k!.
    num / den
}

/// Falling factorial `b (b-1) ... (b-a+1)`.
pub fn falling(b: i64, a: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..a {
        acc *= BigInt::from(b) - BigInt::from(t);
    }
    acc
}

fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 1..=k {
        acc *= BigInt::from(t);
    }
    acc
}

/// Expansion of `Π_i (1+u_i)^{p_i}` truncated at total degree `d_max`.
///
/// The coefficient of `u^δ` is `Π_i C(p_i, δ_i)` with generalized binomial
/// coefficients, so negative entries of `p` yield honest infinite series
/// (geometric and beyond) of which the truncation is returned.
pub fn shift_expand(p: &[i64], d_max: i64) -> TruncatedSeries {
    assert!(d_max >= 0);
    let dim = p.len();
    let mut terms: Vec<(Vec<i64>, Rational)> = Vec::new();
    let mut exps = vec![0i64; dim];
    fn rec(
        p: &[i64],
        coord: usize,
        budget: i64,
        coeff: BigInt,
        exps: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, Rational)>,
    ) {
        if coord == p.len() {
            out.push((exps.clone(), Rational::from_integer(coeff)));
            return;
        }
        let hi = if p[coord] >= 0 {
            p[coord].min(budget)
        } else {
            budget
        };
        for d in 0..=hi {
            let c = binom_int(p[coord], d as u64);
            if c.is_zero() {
                continue;
            }
            exps[coord] = d;
            rec(p, coord + 1, budget - d, &coeff * c, exps, out);
        }
        exps[coord] = 0;
    }
    rec(p, 0, d_max, BigInt::one(), &mut exps, &mut terms);
    TruncatedSeries::new(d_max, MultiPoly::from_terms(dim, terms))
}

/// Expansion of `e^{a·x}` truncated at total degree `d_max`: the coefficient
/// of `x^δ` is `Π_i a_i^{δ_i} / δ_i!`.
pub fn exp_expand(a: &[i64], d_max: i64) -> TruncatedSeries {
    assert!(d_max >= 0);
    let dim = a.len();
    let mut terms: Vec<(Vec<i64>, Rational)> = Vec::new();
    let mut exps = vec![0i64; dim];
    fn rec(
        a: &[i64],
        coord: usize,
        budget: i64,
        coeff: Rational,
        exps: &mut Vec<i64>,
        out: &mut Vec<(Vec<i64>, Rational)>,
    ) {
        if coord == a.len() {
            out.push((exps.clone(), coeff));
            return;
        }
        for d in 0..=budget {
            if a[coord] == 0 && d > 0 {
                break;
            }
            let mut num = BigInt::one();
            for _ in 0..d {
                num *= BigInt::from(a[coord]);
            }
            let c = Rational::new(num, factorial(d as u64));
            exps[coord] = d;
            rec(a, coord + 1, budget - d, &coeff * c, exps, out);
        }
        exps[coord] = 0;
    }
    rec(a, 0, d_max, Rational::one(), &mut exps, &mut terms);
    TruncatedSeries::new(d_max, MultiPoly::from_terms(dim, terms))
}

/// The apolarity action `f(∂) g`: each term `c_f x^α` of `f` acts on each
/// term `c_g x^β` of `g` as `c_f c_g Π_i β_i(β_i-1)...(β_i-α_i+1) x^{β-α}`.
/// Requires `f` to have nonnegative exponents; `g` may be Laurent.
pub fn apply_diff(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    assert_eq!(f.dim(), g.dim());
    assert!(f.is_polynomial(), "differential operator must be polynomial");
    let mut out = MultiPoly::zero(f.dim());
    for (ma, ca) in f.terms() {
        for (mb, cb) in g.terms() {
            let mut factor = BigInt::one();
            for (&a, &b) in ma.0.iter().zip(&mb.0) {
                factor *= falling(b, a as u64);
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let exps: Vec<i64> = mb.0.iter().zip(&ma.0).map(|(b, a)| b - a).collect();
            out.add_term(exps, ca * cb * Rational::from_integer(factor));
        }
    }
    out
}

/// Product of two polynomials (free function mirror of [`MultiPoly::mul`]).
pub fn multiply(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    f.mul(g)
}

/// Exact division: `Some(q)` with `f = q g` when `g` divides `f`, `None`
/// otherwise. Both operands may be Laurent; divisibility is decided in the
/// Laurent ring. Panics if `g` is zero.
///
/// Internally both operands are normalized by monomial factors so that their
/// support touches exponent 0 in every coordinate; a monomial is a unit of
/// the Laurent ring, so this changes neither divisibility nor the quotient
/// once the normalizing shifts are added back.
pub fn divide_exact(f: &MultiPoly, g: &MultiPoly) -> Option<MultiPoly> {
    assert!(!g.is_zero(), "division by zero polynomial");
    assert_eq!(f.dim(), g.dim());
    if f.is_zero() {
        return Some(MultiPoly::zero(f.dim()));
    }
    let a = f.min_exponents().expect("nonzero");
    let b = g.min_exponents().expect("nonzero");
    let neg_a: Vec<i64> = a.iter().map(|x| -x).collect();
    let neg_b: Vec<i64> = b.iter().map(|x| -x).collect();
    let fp = f.shifted_by(&neg_a);
    let gp = g.shifted_by(&neg_b);

    // Single-divisor division under graded lex: the leading term of the
    // remainder-in-progress must stay divisible at every step, otherwise g
    // does not divide f.
    let (glead, gcoeff) = gp
        .terms
        .iter()
        .next_back()
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("divisor is nonzero");
    let mut rem = fp;
    let mut quot = MultiPoly::zero(f.dim());
    while !rem.is_zero() {
        let (rlead, rcoeff) = rem
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero");
        let divides = rlead.0.iter().zip(&glead.0).all(|(r, g)| r >= g);
        if !divides {
            return None;
        }
        let exps: Vec<i64> = rlead.0.iter().zip(&glead.0).map(|(r, g)| r - g).collect();
        let t = MultiPoly::monomial(f.dim(), exps, &rcoeff / &gcoeff);
        rem = rem.sub(&t.mul(&gp));
        quot = quot.add(&t);
    }
    // Undo the normalizing shifts: f = x^a f', g = x^b g', q = x^{a-b} q'.
    let shift: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    Some(quot.shifted_by(&shift))
}

/// Expansion of a Laurent polynomial around the all-ones point: substitute
/// `x_i -> 1 + u_i` and return the exact polynomial in `u`.
///
/// The input is first multiplied by the monomial `x^{-min}`; a monomial
/// expands to the unit `(1+u)^{min}` with constant term 1, so the lowest
/// nonzero part of the expansion is unchanged by this normalization while
/// making every exponent nonnegative (hence the expansion finite and exact).
pub fn expand_at_ones(f: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return MultiPoly::zero(f.dim());
    }
    let mins = f.min_exponents().expect("nonzero");
    let neg: Vec<i64> = mins.iter().map(|x| -x).collect();
    let shifted = f.shifted_by(&neg);
    let d_max: i64 = shifted
        .terms()
        .map(|(m, _)| m.total_degree())
        .max()
        .unwrap_or(0);
    let mut out = MultiPoly::zero(f.dim());
    for (m, c) in shifted.terms() {
        let expansion = shift_expand(&m.0, d_max);
        out = out.add(&expansion.poly().scale(c));
    }
    out
}

/// Order of vanishing at the all-ones point: the least total degree of a
/// nonzero term in [`expand_at_ones`]. `None` for the zero polynomial.
pub fn vanishing_order(f: &MultiPoly) -> Option<usize> {
    expand_at_ones(f)
        .lowest_part()
        .map(|(d, _)| d.to_usize().expect("valuation is nonnegative"))
}

/// All exponent vectors in `dim` variables with total degree exactly `d`,
/// in ascending lexicographic order.
pub fn monomials_of_degree(dim: usize, d: i64) -> Vec<Vec<i64>> {
    assert!(d >= 0);
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    fn rec(dim: usize, coord: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if coord == dim - 1 {
            cur[coord] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[coord] = e;
            rec(dim, coord + 1, left - e, cur, out);
        }
        cur[coord] = 0;
    }
    if dim == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(dim, 0, d, &mut cur, &mut out);
    out
}

/// All exponent vectors with total degree at most `d`, in ascending
/// graded-lex order.
pub fn monomials_up_to(dim: usize, d: i64) -> Vec<Vec<i64>> {
    (0..=d).flat_map(|k| monomials_of_degree(dim, k)).collect()
}
