//! Normal forms modulo ideals: full Buchberger in small rings, bidegree-local
//! echelon reduction for bigraded ideals, and Hilbert-series invariants.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Bidegree, Exponent, MonomialOrder, Polynomial};
use crate::rational::{denominator_lcm, Rational};
use crate::Error;

// ---------------------------------------------------------------------------
// Ideal

/// A polynomial ideal given by generators, with homogeneity flags verified at
/// construction. `bigraded` carries the number of x-variables when the
/// generators are bihomogeneous for the (deg_X, deg_Y) splitting.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    bigraded: Option<usize>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self, Error> {
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::Structural("zero generator in ideal".into()));
        }
        if generators.iter().any(|g| g.nvars() != nvars) {
            return Err(Error::Structural("generator in wrong ring".into()));
        }
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            nvars,
            generators,
            homogeneous,
            bigraded: None,
        })
    }

    /// Mark the ideal as bigraded with `nx` leading x-variables; every
    /// generator must be bihomogeneous.
    pub fn with_bigrading(mut self, nx: usize) -> Result<Self, Error> {
        for g in &self.generators {
            if g.bidegree(nx).is_none() {
                return Err(Error::Structural(
                    "generator not bihomogeneous; cannot bigrade".into(),
                ));
            }
        }
        self.bigraded = Some(nx);
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn bigraded_nx(&self) -> Option<usize> {
        self.bigraded
    }
}

// ---------------------------------------------------------------------------
// Packed monomials

/// Monomial keys packed into a `u128` so that plain integer comparison agrees
/// with the graded monomial order: total degree in the top byte, then one
/// byte per variable. For lex tie-break the bytes hold raw exponents in
/// precedence order; for revlex tie-break they hold complemented exponents
/// (0xff − e) in reversed precedence order, which makes "smaller last
/// exponent wins" an ordinary unsigned comparison. Supports up to 15
/// variables with exponents below 256.
#[derive(Clone, Debug)]
pub(crate) struct Packer {
    perm: Vec<usize>,
    nvars: usize,
    revlex: bool,
}

impl Packer {
    pub fn new(order: &MonomialOrder) -> Result<Self, Error> {
        let n = order.nvars();
        if n > 15 {
            return Err(Error::Structural(format!(
                "packed monomials support at most 15 variables, got {n}"
            )));
        }
        let revlex = order.kind() == crate::poly::OrderKind::RevLex;
        let mut perm = order.precedence().to_vec();
        if revlex {
            perm.reverse();
        }
        Ok(Packer {
            perm,
            nvars: n,
            revlex,
        })
    }

    fn encode(&self, e: u32) -> u128 {
        if self.revlex {
            (0xff - e) as u128
        } else {
            e as u128
        }
    }

    fn decode(&self, byte: u128) -> u32 {
        if self.revlex {
            0xff - byte as u32
        } else {
            byte as u32
        }
    }

    pub fn pack(&self, e: &Exponent) -> u128 {
        debug_assert!(e.as_slice().iter().all(|&x| x < 256));
        let mut k: u128 = (e.total_degree() as u128) << 120;
        for (slot, &i) in self.perm.iter().enumerate() {
            k |= self.encode(e.get(i)) << (112 - 8 * slot);
        }
        k
    }

    pub fn unpack(&self, k: u128) -> Exponent {
        let mut out = vec![0u32; self.nvars];
        for (slot, &i) in self.perm.iter().enumerate() {
            out[i] = self.decode((k >> (112 - 8 * slot)) & 0xff);
        }
        Exponent::new(out)
    }

    pub fn degree(k: u128) -> u32 {
        (k >> 120) as u32
    }

    fn byte(&self, k: u128, slot: usize) -> u32 {
        self.decode((k >> (112 - 8 * slot)) & 0xff)
    }

    /// Componentwise divisibility on packed keys.
    pub fn divides(&self, a: u128, b: u128) -> bool {
        if Self::degree(a) > Self::degree(b) {
            return false;
        }
        (0..self.nvars).all(|s| self.byte(a, s) <= self.byte(b, s))
    }

    pub fn quotient(&self, a: u128, b: u128) -> u128 {
        debug_assert!(self.divides(b, a));
        if !self.revlex {
            return a - b;
        }
        let mut k = ((Self::degree(a) - Self::degree(b)) as u128) << 120;
        for s in 0..self.nvars {
            k |= self.encode(self.byte(a, s) - self.byte(b, s)) << (112 - 8 * s);
        }
        k
    }

    pub fn lcm(&self, a: u128, b: u128) -> u128 {
        let mut k = 0u128;
        let mut deg = 0u128;
        for s in 0..self.nvars {
            let e = self.byte(a, s).max(self.byte(b, s));
            deg += e as u128;
            k |= self.encode(e) << (112 - 8 * s);
        }
        k | (deg << 120)
    }

    pub fn mul(&self, a: u128, b: u128) -> u128 {
        if !self.revlex {
            return a + b;
        }
        let mut k = ((Self::degree(a) + Self::degree(b)) as u128) << 120;
        for s in 0..self.nvars {
            k |= self.encode(self.byte(a, s) + self.byte(b, s)) << (112 - 8 * s);
        }
        k
    }
}

/// Integer-primitive polynomial in packed form: terms sorted descending by
/// key, content 1, positive leading coefficient.
type IPoly = Vec<(u128, BigInt)>;

fn to_ipoly(p: &Polynomial, packer: &Packer) -> IPoly {
    let lcm = denominator_lcm(p.terms().map(|(_, c)| c));
    let mut terms: Vec<(u128, BigInt)> = p
        .terms()
        .map(|(e, c)| {
            let v = c * Rational::from(lcm.clone());
            debug_assert!(v.denom().is_one());
            (packer.pack(e), v.numer().clone())
        })
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    normalize(&mut terms);
    terms
}

fn normalize(terms: &mut IPoly) {
    terms.retain(|(_, c)| !c.is_zero());
    if terms.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

fn to_polynomial(p: &IPoly, packer: &Packer) -> Polynomial {
    // monic rational form
    let lead = match p.first() {
        None => return Polynomial::zero(packer.nvars),
        Some((_, c)) => c.clone(),
    };
    Polynomial::from_terms(
        packer.nvars,
        p.iter()
            .map(|(k, c)| (packer.unpack(*k), Rational::new(c.clone(), lead.clone()))),
    )
}

/// f := b·f − c·m·g, merging sorted term lists; result normalized.
fn combine(f: &IPoly, b: &BigInt, g: &IPoly, c: &BigInt, m: u128, packer: &Packer) -> IPoly {
    let mut out: IPoly = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() || j < g.len() {
        let kf = f.get(i).map(|t| t.0);
        let kg = g.get(j).map(|t| packer.mul(t.0, m));
        match (kf, kg) {
            (Some(a), Some(bk)) if a == bk => {
                let v = &f[i].1 * b - &g[j].1 * c;
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(bk)) if a > bk => {
                out.push((a, &f[i].1 * b));
                i += 1;
            }
            (Some(_), Some(bk)) => {
                out.push((bk, -(&g[j].1 * c)));
                j += 1;
            }
            (Some(a), None) => {
                out.push((a, &f[i].1 * b));
                i += 1;
            }
            (None, Some(bk)) => {
                out.push((bk, -(&g[j].1 * c)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    normalize(&mut out);
    out
}

/// Full reduction of f against the basis; every monomial of the result is
/// outside the leading-term ideal.
fn reduce_full(mut f: IPoly, basis: &[IPoly], packer: &Packer) -> IPoly {
    let mut pos = 0; // all terms before `pos` are already irreducible
    'outer: while pos < f.len() {
        let k = f[pos].0;
        for g in basis {
            if g.is_empty() {
                continue;
            }
            if packer.divides(g[0].0, k) {
                let m = packer.quotient(k, g[0].0);
                let c = f[pos].1.clone();
                let b = g[0].1.clone();
                f = combine(&f, &b, g, &c, m, packer);
                // positions can shift arbitrarily after normalization
                pos = 0;
                continue 'outer;
            }
        }
        pos += 1;
    }
    f
}

// ---------------------------------------------------------------------------
// Buchberger

/// A reduced Gröbner basis: monic elements, fully interreduced.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    packed: Vec<IPoly>,
    packer: Packer,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_exponents(&self) -> Vec<Exponent> {
        self.packed
            .iter()
            .map(|g| self.packer.unpack(g[0].0))
            .collect()
    }
}

/// Buchberger's algorithm with normal (smallest-lcm) pair selection and the
/// coprimality criterion, over content-stripped integer arithmetic.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, Error> {
    if ideal.generators().is_empty() {
        return Err(Error::Structural("empty generator list".into()));
    }
    if order.nvars() != ideal.nvars() {
        return Err(Error::Structural("order/ring variable count mismatch".into()));
    }
    let packer = Packer::new(order)?;
    let mut basis: Vec<IPoly> = Vec::new();
    for g in ideal.generators() {
        let ip = to_ipoly(g, &packer);
        if !ip.is_empty() {
            basis.push(ip);
        }
    }

    // pair queue keyed by lcm of leading monomials, ascending
    let mut queue: BTreeMap<u128, Vec<(usize, usize)>> = BTreeMap::new();
    let push_pairs = |queue: &mut BTreeMap<u128, Vec<(usize, usize)>>,
                          basis: &[IPoly],
                          j: usize| {
        for i in 0..j {
            let a = basis[i][0].0;
            let b = basis[j][0].0;
            let l = packer.lcm(a, b);
            if l == packer.mul(a, b) {
                continue; // coprime leading monomials: S-poly reduces to zero
            }
            queue.entry(l).or_default().push((i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &basis, j);
    }

    while let Some((&lcm_key, _)) = queue.iter().next() {
        let mut pairs = queue.remove(&lcm_key).unwrap();
        while let Some((i, j)) = pairs.pop() {
            let (gi, gj) = (&basis[i], &basis[j]);
            let (ki, ci) = (gi[0].0, gi[0].1.clone());
            let (kj, cj) = (gj[0].0, gj[0].1.clone());
            let l = packer.lcm(ki, kj);
            // S-polynomial: cj·(l/ki)·gi − ci·(l/kj)·gj
            let spoly = combine(
                &gi.iter()
                    .map(|(k, c)| (packer.mul(*k, packer.quotient(l, ki)), c * &cj))
                    .collect::<Vec<_>>(),
                &BigInt::one(),
                gj,
                &ci,
                packer.quotient(l, kj),
                &packer,
            );
            let rem = reduce_full(spoly, &basis, &packer);
            if rem.is_empty() {
                continue;
            }
            basis.push(rem);
            let new = basis.len() - 1;
            push_pairs(&mut queue, &basis, new);
        }
    }

    // interreduce: drop elements whose LT is divisible by another LT, then
    // tail-reduce each survivor against the others
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && packer.divides(basis[j][0].0, basis[i][0].0)
                && (basis[j][0].0 != basis[i][0].0 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let survivors: Vec<IPoly> = basis
        .into_iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(g, _)| g)
        .collect();
    let mut reduced: Vec<IPoly> = Vec::with_capacity(survivors.len());
    for i in 0..survivors.len() {
        let others: Vec<IPoly> = survivors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce_full(survivors[i].clone(), &others, &packer));
    }
    reduced.sort_by(|a, b| a[0].0.cmp(&b[0].0));

    let elements = reduced.iter().map(|g| to_polynomial(g, &packer)).collect();
    Ok(GroebnerBasis {
        elements,
        order: order.clone(),
        packed: reduced,
        packer,
    })
}

/// Unique normal form of `f` modulo the ideal: no monomial of the result is
/// divisible by any leading monomial of the basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    // rational bookkeeping: the result must be the exact coset
    // representative of f, not a scalar multiple of it
    reduce_rational(f, gb)
}

/// Rational-arithmetic division keeping the exact coset representative.
fn reduce_rational(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let packer = &gb.packer;
    let mut terms: BTreeMap<std::cmp::Reverse<u128>, Rational> = f
        .terms()
        .map(|(e, c)| (std::cmp::Reverse(packer.pack(e)), c.clone()))
        .collect();
    let monic: Vec<Vec<(u128, Rational)>> = gb
        .packed
        .iter()
        .map(|g| {
            let lead = Rational::from(g[0].1.clone());
            g.iter()
                .map(|(k, c)| (*k, Rational::from(c.clone()) / &lead))
                .collect()
        })
        .collect();
    let mut out: Vec<(u128, Rational)> = Vec::new();
    while let Some((&std::cmp::Reverse(k), _)) = terms.iter().next() {
        let c = terms.remove(&std::cmp::Reverse(k)).unwrap();
        if c.is_zero() {
            continue;
        }
        let mut hit = None;
        for g in &monic {
            if packer.divides(g[0].0, k) {
                hit = Some(g);
                break;
            }
        }
        match hit {
            None => out.push((k, c)),
            Some(g) => {
                let m = packer.quotient(k, g[0].0);
                for (kg, cg) in &g[1..] {
                    let key = std::cmp::Reverse(packer.mul(*kg, m));
                    let entry = terms.entry(key).or_insert_with(Rational::zero);
                    *entry -= &c * cg;
                    if entry.is_zero() {
                        terms.remove(&key.clone());
                    }
                }
            }
        }
    }
    Polynomial::from_terms(f.nvars(), out.into_iter().map(|(k, c)| (packer.unpack(k), c)))
}

// ---------------------------------------------------------------------------
// Bigraded (degree-local) reduction

/// x-exponent parity signature of a monomial, as a bitmask over the first
/// `nx` variables. Generators of a parity-uniform bigraded ideal produce rows
/// confined to a single signature, so reduction shards cleanly.
fn parity_class(e: &Exponent, nx: usize) -> u32 {
    let mut m = 0u32;
    for i in 0..nx {
        if e.get(i) % 2 == 1 {
            m |= 1 << i;
        }
    }
    m
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=d).rev() {
            cur.push(first);
            rec(n - 1, d - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, d, &mut cur, &mut out);
    out
}

/// Exponent vectors of total degree `d` in `n` variables with prescribed
/// coordinate parities (bit i of `parity` = parity of coordinate i).
fn monomials_of_degree_parity(n: usize, d: u32, parity: u32) -> Vec<Vec<u32>> {
    let base: Vec<u32> = (0..n).map(|i| (parity >> i) & 1).collect();
    let base_deg: u32 = base.iter().sum();
    if base_deg > d || (d - base_deg) % 2 != 0 {
        return Vec::new();
    }
    monomials_of_degree(n, (d - base_deg) / 2)
        .into_iter()
        .map(|half| {
            half.iter()
                .zip(&base)
                .map(|(&h, &b)| 2 * h + b)
                .collect()
        })
        .collect()
}

/// Row-echelon dictionary: pivot monomial -> monic row (pivot coefficient 1,
/// pivot key listed first).
struct Echelon {
    rows: HashMap<u128, Vec<(u128, Rational)>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: HashMap::new(),
        }
    }

    fn insert(&mut self, mut f: BTreeMap<u128, Rational>) {
        loop {
            f.retain(|_, c| !c.is_zero());
            let Some((&lead, _)) = f.iter().next_back() else {
                return;
            };
            match self.rows.get(&lead) {
                None => {
                    let c0 = f[&lead].clone();
                    let mut row: Vec<(u128, Rational)> = vec![(lead, Rational::one())];
                    for (k, c) in f.iter() {
                        if *k != lead {
                            row.push((*k, c / &c0));
                        }
                    }
                    self.rows.insert(lead, row);
                    return;
                }
                Some(row) => {
                    let c = f.remove(&lead).unwrap();
                    for (k, rc) in &row[1..] {
                        let e = f.entry(*k).or_insert_with(Rational::zero);
                        *e -= &c * rc;
                    }
                }
            }
        }
    }

    fn reduce(&self, f: &mut BTreeMap<u128, Rational>) {
        loop {
            f.retain(|_, c| !c.is_zero());
            let Some(&k) = f.keys().rev().find(|k| self.rows.contains_key(k)) else {
                return;
            };
            let c = f.remove(&k).unwrap();
            for (k2, rc) in &self.rows[&k][1..] {
                let e = f.entry(*k2).or_insert_with(Rational::zero);
                *e -= &c * rc;
            }
        }
    }
}

/// Bidegree-local normal forms for a bigraded ideal. Echelon bases are built
/// lazily per bidegree component and cached. When every generator has uniform
/// x-parity (as the Jacobian ideal does), rows never mix parity signatures
/// and each component is sharded by signature, which keeps the echelon
/// dictionaries small.
pub struct BigradedReducer {
    ideal: Ideal,
    nx: usize,
    packer: Packer,
    gens: Vec<(Bidegree, u32, Vec<(Exponent, Rational)>)>,
    sharded: bool,
    cache: Mutex<HashMap<(Bidegree, Option<u32>), Arc<Echelon>>>,
}

impl BigradedReducer {
    pub fn new(ideal: Ideal, order: &MonomialOrder) -> Result<Self, Error> {
        let Some(nx) = ideal.bigraded_nx() else {
            return Err(Error::Contract("reducer requires a bigraded ideal".into()));
        };
        let packer = Packer::new(order)?;
        let mut gens = Vec::new();
        let mut sharded = true;
        for g in ideal.generators() {
            let d = g.bidegree(nx).expect("checked at construction");
            let classes: HashSet<u32> = g.terms().map(|(e, _)| parity_class(e, nx)).collect();
            if classes.len() != 1 {
                sharded = false;
            }
            let class = *classes.iter().next().unwrap();
            gens.push((
                d,
                class,
                g.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
            ));
        }
        Ok(BigradedReducer {
            ideal,
            nx,
            packer,
            gens,
            sharded,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    fn component(&self, d: Bidegree, class: Option<u32>) -> Arc<Echelon> {
        if let Some(e) = self.cache.lock().unwrap().get(&(d, class)) {
            return Arc::clone(e);
        }
        let ny = self.ideal.nvars() - self.nx;
        let mut ech = Echelon::new();
        for (gd, gclass, terms) in &self.gens {
            if gd.deg_x > d.deg_x || gd.deg_y > d.deg_y {
                continue;
            }
            let (mdx, mdy) = (d.deg_x - gd.deg_x, d.deg_y - gd.deg_y);
            let xmults = match class {
                Some(c) => monomials_of_degree_parity(self.nx, mdx, c ^ gclass),
                None => monomials_of_degree(self.nx, mdx),
            };
            let ymults = monomials_of_degree(ny, mdy);
            for xm in &xmults {
                for ym in &ymults {
                    let mut mexp = xm.clone();
                    mexp.extend_from_slice(ym);
                    let m = Exponent::new(mexp);
                    let row: BTreeMap<u128, Rational> = terms
                        .iter()
                        .map(|(e, c)| (self.packer.pack(&e.mul(&m)), c.clone()))
                        .collect();
                    ech.insert(row);
                }
            }
        }
        let arc = Arc::new(ech);
        self.cache
            .lock()
            .unwrap()
            .insert((d, class), Arc::clone(&arc));
        arc
    }

    /// Normal form of a bihomogeneous `f` of bidegree `d` modulo the ideal,
    /// computed inside the single graded component.
    pub fn graded_normal_form(&self, f: &Polynomial, d: Bidegree) -> Result<Polynomial, Error> {
        if f.is_zero() {
            return Ok(f.clone());
        }
        match f.bidegree(self.nx) {
            Some(fd) if fd == d => {}
            _ => {
                return Err(Error::Contract(format!(
                    "input is not homogeneous of bidegree ({}, {})",
                    d.deg_x, d.deg_y
                )))
            }
        }
        // shard terms by x-parity signature when the generators allow it
        let mut shards: HashMap<Option<u32>, BTreeMap<u128, Rational>> = HashMap::new();
        for (e, c) in f.terms() {
            let key = if self.sharded {
                Some(parity_class(e, self.nx))
            } else {
                None
            };
            shards
                .entry(key)
                .or_default()
                .insert(self.packer.pack(e), c.clone());
        }
        let mut out = Polynomial::zero(f.nvars());
        for (class, mut shard) in shards {
            let ech = self.component(d, class);
            ech.reduce(&mut shard);
            for (k, c) in shard {
                out.add_term(self.packer.unpack(k), c);
            }
        }
        Ok(out)
    }

    /// Standard monomials (the complement of the pivot set) of the component
    /// of bidegree `d` within one x-parity class, sorted descending under the
    /// order.
    pub fn standard_monomials(&self, d: Bidegree, class: u32) -> Vec<Exponent> {
        let ech = self.component(d, if self.sharded { Some(class) } else { None });
        let ny = self.ideal.nvars() - self.nx;
        let mut keys: Vec<u128> = Vec::new();
        for xm in monomials_of_degree_parity(self.nx, d.deg_x, class) {
            for ym in monomials_of_degree(ny, d.deg_y) {
                let mut e = xm.clone();
                e.extend_from_slice(&ym);
                let k = self.packer.pack(&Exponent::new(e));
                if !ech.rows.contains_key(&k) {
                    keys.push(k);
                }
            }
        }
        keys.sort_by(|a, b| b.cmp(a));
        keys.into_iter().map(|k| self.packer.unpack(k)).collect()
    }
}

// ---------------------------------------------------------------------------
// Hilbert data

/// Hilbert polynomial of a homogeneous quotient, its degree (the projective
/// dimension of the scheme), and the arithmetic genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of P(t), ascending powers, exact rationals.
    pub polynomial: Vec<Rational>,
    /// deg P; −1 when P = 0 (empty scheme).
    pub dimension: i64,
    /// p_a = (−1)^d (P(0) − 1).
    pub arithmetic_genus: BigInt,
}

/// Hilbert data of `R/I` from a Gröbner basis, via the leading-term
/// monomial ideal.
pub fn hilbert_data(gb: &GroebnerBasis) -> Result<HilbertData, Error> {
    for g in gb.elements() {
        if !g.is_homogeneous() {
            return Err(Error::Contract(
                "Hilbert data requires a homogeneous ideal".into(),
            ));
        }
    }
    let n = gb.order().nvars();
    let lts: Vec<Vec<u32>> = gb
        .leading_exponents()
        .iter()
        .map(|e| e.as_slice().to_vec())
        .collect();
    Ok(hilbert_from_monomials(n, &lts))
}

/// Same pipeline starting from monomial generators directly.
pub fn hilbert_from_monomials(n: usize, gens: &[Vec<u32>]) -> HilbertData {
    let num = hilbert_numerator(gens.to_vec());
    // strip (1-t)^s factors from the numerator
    let mut m = num;
    let mut s = 0usize;
    loop {
        match divide_one_minus_t(&m) {
            Some(q) => {
                m = q;
                s += 1;
                if m.iter().all(|c| c.is_zero()) {
                    break;
                }
            }
            None => break,
        }
    }
    let krull = n - s; // Krull dimension of the quotient
    if m.iter().all(|c| c.is_zero()) || krull == 0 {
        // Artinian quotient: the Hilbert function is eventually zero, so the
        // scheme is empty as a projective scheme
        return HilbertData {
            polynomial: vec![],
            dimension: -1,
            arithmetic_genus: BigInt::zero(),
        };
    }
    // P(t) = sum_i M_i * C(t - i + D - 1, D - 1), D = krull
    let d = krull as i64 - 1;
    let mut poly = vec![Rational::zero(); krull];
    for (i, mi) in m.iter().enumerate() {
        if mi.is_zero() {
            continue;
        }
        let term = shifted_binomial(krull - 1, (krull as i64 - 1) - (i as i64));
        for (j, c) in term.iter().enumerate() {
            poly[j] += c * Rational::from(mi.clone());
        }
    }
    while poly.len() > 1 && poly.last().map(|c| c.is_zero()) == Some(true) {
        poly.pop();
    }
    let p0 = poly[0].clone();
    debug_assert!(p0.denom().is_one());
    let sign = if d % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let arithmetic_genus = sign * (p0.numer() - BigInt::one());
    HilbertData {
        polynomial: poly,
        dimension: d,
        arithmetic_genus,
    }
}

/// Numerator of the Hilbert series of R/(monomial ideal) as integer
/// coefficients of powers of t, by recursive pivot-variable splitting.
fn hilbert_numerator(gens: Vec<Vec<u32>>) -> Vec<BigInt> {
    // drop redundant generators (divisible by another)
    let gens: Vec<Vec<u32>> = {
        let mut keep = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let dominated = gens.iter().enumerate().any(|(j, h)| {
                j != i
                    && h.iter().zip(g).all(|(a, b)| a <= b)
                    && (h != g || j < i)
            });
            if !dominated {
                keep.push(g.clone());
            }
        }
        keep
    };
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        return vec![BigInt::zero()];
    }
    // base case: all generators are pure powers
    if gens.iter().all(|g| g.iter().filter(|&&x| x > 0).count() == 1) {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let d: u32 = g.iter().sum();
            let mut factor = vec![BigInt::zero(); d as usize + 1];
            factor[0] = BigInt::one();
            factor[d as usize] = -BigInt::one();
            acc = poly_mul_int(&acc, &factor);
        }
        return acc;
    }
    // pivot on the most frequent variable among those occurring in a
    // non-pure-power generator (guarantees the "plus" branch shrinks)
    let nv = gens[0].len();
    let mixed = |g: &Vec<u32>| g.iter().filter(|&&x| x > 0).count() > 1;
    let v = (0..nv)
        .filter(|&v| gens.iter().any(|g| g[v] > 0 && mixed(g)))
        .max_by_key(|&v| gens.iter().filter(|g| g[v] > 0).count())
        .unwrap();
    let mut piv = vec![0u32; nv];
    piv[v] = 1;
    let quotient: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            if h[v] > 0 {
                h[v] -= 1;
            }
            h
        })
        .collect();
    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|g| g[v] == 0).cloned().collect();
    plus.push(piv);
    let a = hilbert_numerator(plus);
    let b = hilbert_numerator(quotient);
    // N = N(I + (x_v)) + t · N(I : x_v)
    let mut shifted = vec![BigInt::zero()];
    shifted.extend(b);
    poly_add_int(&a, &shifted)
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x + y
        })
        .collect()
}

/// Divide c(t) by (1 − t); `None` when not divisible.
fn divide_one_minus_t(c: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut q = Vec::with_capacity(c.len());
    let mut prev = BigInt::zero();
    for ci in c {
        let cur = ci + &prev;
        q.push(cur.clone());
        prev = cur;
    }
    if !q.last()?.is_zero() {
        return None;
    }
    q.pop();
    if q.is_empty() {
        q.push(BigInt::zero());
    }
    Some(q)
}

/// Coefficients (ascending) of the polynomial C(t + shift, k) in t.
fn shifted_binomial(k: usize, shift: i64) -> Vec<Rational> {
    // product_{j=0}^{k-1} (t + shift - j) / k!
    let mut poly = vec![Rational::one()];
    for j in 0..k {
        let c = Rational::from(BigInt::from(shift - j as i64));
        // multiply by (t + c)
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i] += a * &c;
            next[i + 1] += a;
        }
        poly = next;
    }
    let mut fact = BigInt::one();
    for j in 1..=k {
        fact *= BigInt::from(j);
    }
    let f = Rational::from(fact);
    poly.into_iter().map(|c| c / &f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::rational::rat_int;

    #[test]
    fn revlex_packing_agrees_with_order() {
        let ord = MonomialOrder::graded_revlex(3);
        // x^2 z < x y^2 under grevlex (last differing variable z, smaller wins)
        let a = Exponent::new(vec![2, 0, 1]);
        let b = Exponent::new(vec![1, 2, 0]);
        assert_eq!(ord.cmp_unchecked(&a, &b), std::cmp::Ordering::Less);
        let packer = Packer::new(&ord).unwrap();
        assert!(packer.pack(&a) < packer.pack(&b));
        assert_eq!(packer.unpack(packer.pack(&a)), a);
        let (ka, kb) = (packer.pack(&a), packer.pack(&b));
        assert_eq!(packer.unpack(packer.mul(ka, kb)), a.mul(&b));
        assert_eq!(packer.unpack(packer.lcm(ka, kb)), a.lcm(&b));
        assert!(packer.divides(ka, packer.mul(ka, kb)));
        assert!(!packer.divides(kb, ka));
        assert_eq!(packer.quotient(packer.mul(ka, kb), kb), ka);
    }

    #[test]
    fn revlex_hilbert_agrees_with_lex() {
        // twisted cubic: dimension 1, genus 0 under any global order
        let gens: Vec<Polynomial> = [
            "v1*v3 - v2^2",
            "v1*v4 - v2*v3",
            "v2*v4 - v3^2",
        ]
        .iter()
        .map(|s| parse_polynomial(s, 4).unwrap())
        .collect();
        let ideal = Ideal::new(4, gens).unwrap();
        for order in [MonomialOrder::graded_lex(4), MonomialOrder::graded_revlex(4)] {
            let gb = buchberger(&ideal, &order).unwrap();
            let h = hilbert_data(&gb).unwrap();
            assert_eq!(h.dimension, 1);
            assert_eq!(h.arithmetic_genus, 0.into());
        }
    }

    fn ideal2(srcs: &[&str]) -> Ideal {
        Ideal::new(
            2,
            srcs.iter()
                .map(|s| parse_polynomial(s, 2).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn buchberger_monomial_ideal_unchanged() {
        let ord = MonomialOrder::graded_lex(2);
        let gb = buchberger(&ideal2(&["v1", "v2"]), &ord).unwrap();
        let names = crate::poly::var_names(2);
        let mut strs: Vec<String> = gb.elements().iter().map(|g| g.display(&names)).collect();
        strs.sort();
        assert_eq!(strs, vec!["v1", "v2"]);
    }

    #[test]
    fn buchberger_adds_spoly() {
        // {v1^2 + v2^2, v1 v2} completes with v2^3
        let ord = MonomialOrder::graded_lex(2);
        let gb = buchberger(&ideal2(&["v1^2 + v2^2", "v1*v2"]), &ord).unwrap();
        let names = crate::poly::var_names(2);
        let mut strs: Vec<String> = gb.elements().iter().map(|g| g.display(&names)).collect();
        strs.sort();
        assert_eq!(strs, vec!["v1*v2", "v1^2 + v2^2", "v2^3"]);
        // every generator reduces to zero
        for g in ideal2(&["v1^2 + v2^2", "v1*v2"]).generators() {
            assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn buchberger_unit_ideal() {
        let ord = MonomialOrder::graded_lex(2);
        let gb = buchberger(&ideal2(&["3"]), &ord).unwrap();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0], Polynomial::one(2));
    }

    #[test]
    fn normal_form_is_idempotent_and_exact() {
        let ord = MonomialOrder::graded_lex(2);
        let gb = buchberger(&ideal2(&["v1^2 + v2^2", "v1*v2"]), &ord).unwrap();
        let f = parse_polynomial("v1^3 + 2*v1^2*v2 - 1/3*v2^2 + v1", 2).unwrap();
        let nf = normal_form(&f, &gb);
        assert_eq!(normal_form(&nf, &gb), nf);
        // f - NF(f) must lie in the ideal
        let diff = f.sub(&nf);
        assert!(normal_form(&diff, &gb).is_zero());
    }

    #[test]
    fn hilbert_zero_ideal_full_space() {
        // no relations in 9 variables: P(t) = C(t+8, 8), dim 8, genus 0
        let h = hilbert_from_monomials(9, &[]);
        assert_eq!(h.dimension, 8);
        assert_eq!(h.arithmetic_genus, BigInt::zero());
        // P(0) = 1, P(1) = 9, P(2) = 45
        assert_eq!(eval(&h.polynomial, 0), rat_int(1));
        assert_eq!(eval(&h.polynomial, 1), rat_int(9));
        assert_eq!(eval(&h.polynomial, 2), rat_int(45));
    }

    #[test]
    fn hilbert_single_quadric() {
        let mut q = vec![0u32; 9];
        q[0] = 2;
        let h = hilbert_from_monomials(9, &[q]);
        assert_eq!(h.dimension, 7);
    }

    #[test]
    fn hilbert_monomial_complete_intersections() {
        // k quadric pure powers in n variables: projective dimension n-1-k
        for n in 3..6usize {
            for k in 1..n {
                let gens: Vec<Vec<u32>> = (0..k)
                    .map(|i| {
                        let mut g = vec![0u32; n];
                        g[i] = 2;
                        g
                    })
                    .collect();
                let h = hilbert_from_monomials(n, &gens);
                assert_eq!(h.dimension as usize, n - 1 - k, "n={n} k={k}");
            }
        }
        // 4 quadrics in 5 variables: a degree-16 zero-dimensional scheme
        let gens: Vec<Vec<u32>> = (0..4)
            .map(|i| {
                let mut g = vec![0u32; 5];
                g[i] = 2;
                g
            })
            .collect();
        let h = hilbert_from_monomials(5, &gens);
        assert_eq!(h.dimension, 0);
        assert_eq!(eval(&h.polynomial, 5), rat_int(16));
        // irrelevant-ideal quotient is empty as a projective scheme
        let full: Vec<Vec<u32>> = (0..3)
            .map(|i| {
                let mut g = vec![0u32; 3];
                g[i] = 1;
                g
            })
            .collect();
        assert_eq!(hilbert_from_monomials(3, &full).dimension, -1);
    }

    #[test]
    fn hilbert_twisted_cubic() {
        // LT ideal of the twisted cubic (2x2 minors of a 2x3 matrix in P^3):
        // x1x3, x1x4, x2x4 under grevlex-like pivots -> dim 1, genus 0
        let gens = vec![
            vec![1, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 1],
        ];
        let h = hilbert_from_monomials(4, &gens);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.arithmetic_genus, BigInt::zero());
        // P(m) = 3m + 1
        assert_eq!(eval(&h.polynomial, 4), rat_int(13));
    }

    fn eval(p: &[Rational], t: i64) -> Rational {
        let mut acc = Rational::zero();
        let mut pw = Rational::one();
        for c in p {
            acc += c * &pw;
            pw *= rat_int(t);
        }
        acc
    }

    #[test]
    fn bigraded_reducer_membership_and_contract() {
        // tiny bigraded ideal in 3 vars (2 x's, 1 y): generator x1*y1 + x2*y1
        let g = parse_polynomial("v1*v3 + v2*v3", 3).unwrap();
        let ideal = Ideal::new(3, vec![g.clone()])
            .unwrap()
            .with_bigrading(2)
            .unwrap();
        let ord = MonomialOrder::graded_lex(3);
        let red = BigradedReducer::new(ideal, &ord).unwrap();
        let d = Bidegree::new(1, 1);
        assert!(red
            .graded_normal_form(&g, d)
            .unwrap()
            .is_zero());
        // wrong bidegree is a contract violation
        assert!(red
            .graded_normal_form(&g, Bidegree::new(2, 0))
            .is_err());
        // zero passes through
        assert!(red
            .graded_normal_form(&Polynomial::zero(3), d)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn graded_nf_matches_full_nf_small() {
        // same bigraded ideal, cross-check both code paths on all (1,1)
        // and (2,1) monomials
        let g = parse_polynomial("v1*v3 + v2*v3", 3).unwrap();
        let g2 = parse_polynomial("v1^2 - v2^2", 3).unwrap();
        let ideal = Ideal::new(3, vec![g.clone(), g2.clone()]).unwrap();
        let ord = MonomialOrder::graded_lex(3);
        let gb = buchberger(&ideal, &ord).unwrap();
        let red = BigradedReducer::new(
            ideal.clone().with_bigrading(2).unwrap(),
            &ord,
        )
        .unwrap();
        for (dx, dy) in [(1u32, 1u32), (2, 1), (3, 1), (2, 2)] {
            for xm in monomials_of_degree(2, dx) {
                let mut e = xm.clone();
                e.push(dy);
                let m = Polynomial::monomial(Exponent::new(e), Rational::one());
                let a = red
                    .graded_normal_form(&m, Bidegree::new(dx, dy))
                    .unwrap();
                let b = normal_form(&m, &gb);
                assert_eq!(a, b, "mismatch at ({dx},{dy})");
            }
        }
    }
}
