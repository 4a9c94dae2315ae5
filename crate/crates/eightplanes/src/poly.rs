//! Sparse multivariate polynomials over the rationals with graded
//! lexicographic monomial orders and bigraded degree bookkeeping.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{format_rational, parse_rational, Rational};
use crate::Error;

/// Exponent vector of a monomial. The length is fixed by the owning ring
/// context (12 for the Jacobian ring, 9 for the characteristic-variety ring).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(e: Vec<u32>) -> Self {
        Exponent(e)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    /// Single-variable monomial x_i^k (0-based index).
    pub fn single(nvars: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Split the total degree at position `nx` (x-variables first).
    pub fn bidegree(&self, nx: usize) -> Bidegree {
        Bidegree {
            deg_x: self.0[..nx].iter().sum(),
            deg_y: self.0[nx..].iter().sum(),
        }
    }

    pub fn mul(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.0.len(), other.0.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient(&self, other: &Exponent) -> Exponent {
        debug_assert!(self.divides(other));
        Exponent(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Bigraded degree (deg_X, deg_Y) of a bihomogeneous element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Bidegree {
    pub deg_x: u32,
    pub deg_y: u32,
}

impl Bidegree {
    pub fn new(deg_x: u32, deg_y: u32) -> Self {
        Bidegree { deg_x, deg_y }
    }
}

/// Tie-breaking rule once total degrees agree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    /// Lexicographic along the precedence list.
    Lex,
    /// Reverse lexicographic: the last differing variable (in precedence
    /// order) decides, and the smaller exponent there wins.
    RevLex,
}

/// Graded monomial order with configurable variable precedence.
///
/// `precedence[0]` is the greatest variable. Total degree dominates; ties are
/// broken according to `kind`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    precedence: Vec<usize>,
    kind: OrderKind,
}

impl MonomialOrder {
    /// Graded lex with the natural precedence v0 > v1 > ... > v(n-1).
    pub fn graded_lex(nvars: usize) -> Self {
        MonomialOrder {
            precedence: (0..nvars).collect(),
            kind: OrderKind::Lex,
        }
    }

    /// Graded reverse lexicographic with the natural precedence.
    pub fn graded_revlex(nvars: usize) -> Self {
        MonomialOrder {
            precedence: (0..nvars).collect(),
            kind: OrderKind::RevLex,
        }
    }

    pub fn with_precedence(precedence: Vec<usize>) -> Result<Self, Error> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &i in &precedence {
            if i >= n || seen[i] {
                return Err(Error::Structural(format!(
                    "precedence list {precedence:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder {
            precedence,
            kind: OrderKind::Lex,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering, Error> {
        if a.len() != self.precedence.len() || b.len() != self.precedence.len() {
            return Err(Error::Structural(format!(
                "exponent lengths {}/{} do not match order on {} variables",
                a.len(),
                b.len(),
                self.precedence.len()
            )));
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub fn cmp_unchecked(&self, a: &Exponent, b: &Exponent) -> Ordering {
        match a.total_degree().cmp(&b.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.precedence {
                    match a.get(i).cmp(&b.get(i)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
            OrderKind::RevLex => {
                for &i in self.precedence.iter().rev() {
                    match a.get(i).cmp(&b.get(i)) {
                        Ordering::Equal => {}
                        ord => return ord.reverse(),
                    }
                }
            }
        }
        Ordering::Equal
    }

    /// Sort key such that the natural `Vec` ordering agrees with the
    /// monomial order. Useful for order-keyed maps.
    pub fn key(&self, e: &Exponent) -> Vec<u32> {
        let mut k = Vec::with_capacity(e.len() + 1);
        k.push(e.total_degree());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.precedence {
                    k.push(e.get(i));
                }
            }
            OrderKind::RevLex => {
                for &i in self.precedence.iter().rev() {
                    k.push(u32::MAX - e.get(i));
                }
            }
        }
        k
    }
}

/// Sparse polynomial: map from exponents to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Exponent::zero(nvars), Rational::from_integer(1.into()))
    }

    pub fn monomial(e: Exponent, c: Rational) -> Self {
        let nvars = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, e: &Exponent, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e0, c0)| (e0.mul(e), c0 * c))
                .collect(),
        }
    }

    /// Leading term under the given order; `None` for the zero polynomial.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Exponent, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_unchecked(a, b))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The common bidegree of all terms, if the polynomial is bihomogeneous.
    pub fn bidegree(&self, nx: usize) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(|e| e.bidegree(nx));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        // descending by (degree, exponent) for a stable, natural reading
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            (b.total_degree(), b.as_slice()).cmp(&(a.total_degree(), a.as_slice()))
        });
        let mut out = String::new();
        for (idx, (e, c)) in ts.into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            use num_traits::One;
            if !abs.is_one() || e.total_degree() == 0 {
                factors.push(format_rational(&abs));
            }
            for (i, &x) in e.as_slice().iter().enumerate() {
                if x == 1 {
                    factors.push(names[i].clone());
                } else if x > 1 {
                    factors.push(format!("{}^{}", names[i], x));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Conventional variable names: `x1..x8, y1..y4` for the 12-variable
/// Jacobian ring, `z1..z9` for the characteristic-variety ring, `v1..vn`
/// otherwise.
pub fn var_names(nvars: usize) -> Vec<String> {
    match nvars {
        12 => (1..=8)
            .map(|i| format!("x{i}"))
            .chain((1..=4).map(|i| format!("y{i}")))
            .collect(),
        9 => (1..=9).map(|i| format!("z{i}")).collect(),
        n => (1..=n).map(|i| format!("v{i}")).collect(),
    }
}

/// Parse the textual polynomial form used in certificates: rational
/// coefficients, `*` products, `^` powers, conventional variable names.
pub fn parse_polynomial(s: &str, nvars: usize) -> Result<Polynomial, Error> {
    let names = var_names(nvars);
    let mut out = Polynomial::zero(nvars);
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Structural("empty polynomial text".into()));
    }
    // split into signed terms at top level
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    let mut started = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' if started && !cur.trim().is_empty() => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = ch == '-';
            }
            '+' | '-' if !started || cur.trim().is_empty() => {
                if ch == '-' {
                    sign = !sign;
                }
                started = true;
            }
            _ => {
                cur.push(ch);
                started = true;
            }
        }
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur));
    }
    for (neg, term) in terms {
        let mut coeff = Rational::from_integer(1.into());
        let mut exp = Exponent::zero(nvars);
        for factor in term.split('*') {
            let f = factor.trim();
            if f.is_empty() {
                return Err(Error::Structural(format!("empty factor in term {term:?}")));
            }
            let (base, pow) = match f.split_once('^') {
                Some((b, p)) => {
                    let k: u32 = p
                        .trim()
                        .parse()
                        .map_err(|_| Error::Structural(format!("invalid power in {f:?}")))?;
                    (b.trim(), k)
                }
                None => (f, 1),
            };
            if let Some(i) = names.iter().position(|n| n == base) {
                exp = exp.mul(&Exponent::single(nvars, i, pow));
            } else {
                let c = parse_rational(base).map_err(Error::Structural)?;
                let mut acc = Rational::from_integer(1.into());
                for _ in 0..pow {
                    acc *= c.clone();
                }
                coeff *= acc;
            }
        }
        if neg {
            coeff = -coeff;
        }
        out.add_term(exp, coeff);
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&var_names(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use std::cmp::Ordering;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    #[test]
    fn graded_lex_compare() {
        let ord = MonomialOrder::graded_lex(3);
        // x1^2 vs x1*x2: equal degree, lex on first variable
        assert_eq!(
            ord.compare(&e(&[2, 0, 0]), &e(&[1, 1, 0])).unwrap(),
            Ordering::Greater
        );
        // degree 3 beats degree 2 under the graded order
        assert_eq!(
            ord.compare(&e(&[1, 1, 1]), &e(&[2, 0, 0])).unwrap(),
            Ordering::Greater
        );
        // reflexivity
        assert_eq!(
            ord.compare(&e(&[1, 2, 0]), &e(&[1, 2, 0])).unwrap(),
            Ordering::Equal
        );
        // length mismatch is a structural error
        assert!(ord.compare(&e(&[1, 0]), &e(&[1, 0, 0])).is_err());
    }

    #[test]
    fn custom_precedence() {
        // with v2 > v0 > v1 the monomial v2 beats v0^1 at equal degree
        let ord = MonomialOrder::with_precedence(vec![2, 0, 1]).unwrap();
        assert_eq!(
            ord.compare(&e(&[0, 0, 1]), &e(&[1, 0, 0])).unwrap(),
            Ordering::Greater
        );
        assert!(MonomialOrder::with_precedence(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn binomial_square() {
        // (x1 + y1)^2 = x1^2 + 2 x1 y1 + y1^2 in a 2-variable ring
        let p = Polynomial::from_terms(
            2,
            [(e(&[1, 0]), rat_int(1)), (e(&[0, 1]), rat_int(1))],
        );
        let sq = p.mul(&p);
        assert_eq!(sq.coefficient(&e(&[2, 0])), rat_int(1));
        assert_eq!(sq.coefficient(&e(&[1, 1])), rat_int(2));
        assert_eq!(sq.coefficient(&e(&[0, 2])), rat_int(1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn mul_identity_and_annihilator() {
        let p = Polynomial::from_terms(
            2,
            [(e(&[3, 1]), rat_int(5)), (e(&[0, 2]), rat_int(-2))],
        );
        assert_eq!(p.mul(&Polynomial::one(2)), p);
        assert!(p.mul(&Polynomial::zero(2)).is_zero());
    }

    #[test]
    fn bidegree_bookkeeping() {
        let p = Polynomial::monomial(e(&[2, 0, 1]), rat_int(1));
        assert_eq!(p.bidegree(2), Some(Bidegree::new(2, 1)));
        let q = p.add(&Polynomial::monomial(e(&[0, 1, 0]), rat_int(1)));
        assert_eq!(q.bidegree(2), None);
    }

    #[test]
    fn parse_display_round_trip() {
        let names = var_names(12);
        for s in [
            "x1^2*y1 - 2*x5^2*y2",
            "3*x1*x2*y3 + 1/2*y4^3 - x8^2",
            "-x1 + 1",
        ] {
            let p = parse_polynomial(s, 12).unwrap();
            let q = parse_polynomial(&p.display(&names), 12).unwrap();
            assert_eq!(p, q);
        }
    }
}
