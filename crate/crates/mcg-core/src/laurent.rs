//! Multivariate integer Laurent polynomials with exact gcd.
//!
//! Coefficients are `BigInt`; exponents may be negative. Gcds are computed
//! by shifting into the polynomial ring and running a primitive
//! pseudo-remainder sequence, recursing on the number of variables.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A Laurent polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq)]
pub struct LPoly {
    vars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl std::fmt::Debug for LPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render(&default_names(self.vars)))
    }
}

fn default_names(v: usize) -> Vec<String> {
    (1..=v).map(|i| format!("t{}", i)).collect()
}

impl LPoly {
    pub fn zero(vars: usize) -> Self {
        LPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        LPoly::constant(vars, BigInt::one())
    }

    pub fn constant(vars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        LPoly { vars, terms }
    }

    /// The monomial `t_i^e` (0-based variable index).
    pub fn monomial(vars: usize, i: usize, e: i64) -> Self {
        let mut exp = vec![0; vars];
        exp[i] = e;
        let mut terms = BTreeMap::new();
        terms.insert(exp, BigInt::one());
        LPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms_iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn from_term(vars: usize, exp: Vec<i64>, c: BigInt) -> Self {
        let mut p = LPoly::zero(vars);
        p.insert(exp, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&vec![0; self.vars]).map_or(false, |c| c.is_one())
    }

    fn insert(&mut self, exp: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
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

    pub fn add(&self, other: &LPoly) -> LPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LPoly {
        LPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = LPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    /// Canonical unit normalization: shift so every variable's minimum
    /// exponent is 0 and the lexicographically last term has positive
    /// coefficient.
    pub fn unit_normal(&self) -> LPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut mins = vec![i64::MAX; self.vars];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let shifted: Vec<i64> = e.iter().zip(&mins).map(|(a, m)| a - m).collect();
            terms.insert(shifted, c.clone());
        }
        let flip = terms.iter().next_back().map_or(false, |(_, c)| c.is_negative());
        if flip {
            for c in terms.values_mut() {
                *c = -c.clone();
            }
        }
        LPoly { vars: self.vars, terms }
    }

    /// Substitute every variable by the single variable `t` (adds exponents).
    pub fn one_variable(&self) -> LPoly {
        let mut out = LPoly::zero(1);
        for (e, c) in &self.terms {
            out.insert(vec![e.iter().sum()], c.clone());
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { names[i].clone() } else { format!("{}^{}", names[i], x) })
                .collect();
            let mono = mono.join("*");
            let s = if mono.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{}", mono)
            } else {
                format!("{}*{}", c, mono)
            };
            parts.push(s);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// Recursive dense polynomial for gcd computation.
#[derive(Clone, Debug, PartialEq, Eq)]
enum R {
    C(BigInt),
    P(Vec<R>),
}

impl R {
    fn zero(level: usize) -> R {
        if level == 0 {
            R::C(BigInt::zero())
        } else {
            R::P(vec![])
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            R::C(c) => c.is_zero(),
            R::P(v) => v.iter().all(R::is_zero),
        }
    }

    fn trim(self) -> R {
        match self {
            R::P(mut v) => {
                while v.last().map_or(false, |c| c.is_zero()) {
                    v.pop();
                }
                R::P(v)
            }
            c => c,
        }
    }

    fn deg(&self) -> usize {
        match self {
            R::C(_) => 0,
            R::P(v) => v.len().saturating_sub(1),
        }
    }

    fn coeffs(&self) -> &[R] {
        match self {
            R::P(v) => v,
            R::C(_) => panic!("base level has no coefficient list"),
        }
    }

    fn lc(&self, level: usize) -> R {
        match self {
            R::P(v) => v.last().cloned().unwrap_or_else(|| R::zero(level - 1)),
            R::C(_) => self.clone(),
        }
    }

    fn add(&self, other: &R, level: usize) -> R {
        match (self, other) {
            (R::C(a), R::C(b)) => R::C(a + b),
            (R::P(a), R::P(b)) => {
                let n = a.len().max(b.len());
                let mut v = Vec::with_capacity(n);
                for i in 0..n {
                    let x = a.get(i).cloned().unwrap_or_else(|| R::zero(level - 1));
                    let y = b.get(i).cloned().unwrap_or_else(|| R::zero(level - 1));
                    v.push(x.add(&y, level - 1));
                }
                R::P(v).trim()
            }
            _ => panic!("level mismatch"),
        }
    }

    fn neg(&self) -> R {
        match self {
            R::C(c) => R::C(-c),
            R::P(v) => R::P(v.iter().map(R::neg).collect()),
        }
    }

    fn mul(&self, other: &R, level: usize) -> R {
        match (self, other) {
            (R::C(a), R::C(b)) => R::C(a * b),
            (R::P(a), R::P(b)) => {
                if a.is_empty() || b.is_empty() {
                    return R::P(vec![]);
                }
                let mut v = vec![R::zero(level - 1); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        let prod = x.mul(y, level - 1);
                        v[i + j] = v[i + j].add(&prod, level - 1);
                    }
                }
                R::P(v).trim()
            }
            _ => panic!("level mismatch"),
        }
    }

    /// Exact division (panics if inexact); `d` is at the same level.
    fn div_exact(&self, d: &R, level: usize) -> R {
        match (self, d) {
            (R::C(a), R::C(b)) => {
                let (q, r) = num_integer::div_rem(a.clone(), b.clone());
                assert!(r.is_zero(), "inexact integer division");
                R::C(q)
            }
            (R::P(_), R::P(_)) => {
                let mut rem = self.clone().trim();
                let dd = d.clone().trim();
                let ddeg = dd.deg();
                let dlc = dd.lc(level);
                let mut q = vec![R::zero(level - 1); rem.deg().saturating_sub(ddeg) + 1];
                while !rem.is_zero() && rem.deg() >= ddeg {
                    let shift = rem.deg() - ddeg;
                    let c = rem.lc(level).div_exact(&dlc, level - 1);
                    q[shift] = c.clone();
                    // rem -= c * x^shift * d
                    let mut sub = vec![R::zero(level - 1); shift];
                    for co in dd.coeffs() {
                        sub.push(co.mul(&c, level - 1));
                    }
                    rem = rem.add(&R::P(sub).neg(), level).trim();
                    if rem.deg() == 0 && rem.is_zero() {
                        break;
                    }
                    if !rem.is_zero() && rem.deg() == shift + ddeg {
                        panic!("inexact polynomial division");
                    }
                }
                assert!(rem.is_zero(), "inexact polynomial division");
                R::P(q).trim()
            }
            _ => panic!("level mismatch"),
        }
    }

    /// Gcd of all coefficients (one level down).
    fn content(&self, level: usize) -> R {
        match self {
            R::C(c) => R::C(c.abs()),
            R::P(v) => {
                let mut acc = R::zero(level - 1);
                for c in v {
                    acc = gcd_r(&acc, c, level - 1);
                }
                acc
            }
        }
    }
}

fn gcd_r(a: &R, b: &R, level: usize) -> R {
    if a.is_zero() {
        return positive_normal(b.clone(), level);
    }
    if b.is_zero() {
        return positive_normal(a.clone(), level);
    }
    if level == 0 {
        if let (R::C(x), R::C(y)) = (a, b) {
            return R::C(num_integer::gcd(x.clone(), y.clone()));
        }
        unreachable!()
    }
    let ca = a.content(level);
    let cb = b.content(level);
    let cg = gcd_r(&ca, &cb, level - 1);
    let mut f = a.div_exact(&lift(&ca, level), level);
    let mut g = b.div_exact(&lift(&cb, level), level);
    if f.deg() < g.deg() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            break;
        }
        let r = prem(&f, &g, level);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let c = r.content(level);
            r.div_exact(&lift(&c, level), level)
        };
    }
    let pp = positive_normal(f, level);
    pp.mul(&lift(&cg, level), level)
}

/// Lift a level-(L-1) element to a degree-0 polynomial at level L.
fn lift(c: &R, level: usize) -> R {
    if level == 0 {
        c.clone()
    } else {
        R::P(vec![c.clone()]).trim()
    }
}

/// Pseudo-remainder of `f` by `g` in the top variable.
fn prem(f: &R, g: &R, level: usize) -> R {
    let mut r = f.clone().trim();
    let gd = g.deg();
    let glc = g.lc(level);
    while !r.is_zero() && r.deg() >= gd {
        let shift = r.deg() - gd;
        let rlc = r.lc(level);
        // r = glc * r - rlc * x^shift * g
        let mut sub = vec![R::zero(level - 1); shift];
        for co in g.coeffs() {
            sub.push(co.mul(&rlc, level - 1));
        }
        r = r.mul(&lift(&glc, level), level).add(&R::P(sub).neg(), level).trim();
    }
    r
}

/// Normalize the recursive leading integer to be positive.
fn positive_normal(p: R, _level: usize) -> R {
    fn lead_int(p: &R) -> BigInt {
        match p {
            R::C(c) => c.clone(),
            R::P(v) => v.last().map(lead_int).unwrap_or_else(BigInt::zero),
        }
    }
    if lead_int(&p).is_negative() {
        p.neg()
    } else {
        p
    }
}

fn to_r(p: &LPoly) -> R {
    // shift to nonnegative exponents first
    let q = p.unit_normal();
    fn build(terms: &[(Vec<i64>, BigInt)], level: usize, prefix: &mut Vec<i64>) -> R {
        if level == 0 {
            let c = terms
                .iter()
                .find(|(e, _)| e[..] == prefix[..])
                .map(|(_, c)| c.clone())
                .unwrap_or_else(BigInt::zero);
            return R::C(c);
        }
        let var = prefix.len();
        let maxdeg = terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0);
        let mut v = Vec::new();
        for d in 0..=maxdeg {
            prefix.push(d);
            let sub: Vec<(Vec<i64>, BigInt)> = terms
                .iter()
                .filter(|(e, _)| e[var] == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            v.push(build(&sub, level - 1, prefix));
            prefix.pop();
        }
        R::P(v).trim()
    }
    let terms: Vec<(Vec<i64>, BigInt)> =
        q.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
    // recursive layout: variable 0 is outermost
    fn build_outer(terms: &[(Vec<i64>, BigInt)], vars: usize) -> R {
        let mut prefix = Vec::new();
        build(terms, vars, &mut prefix)
    }
    build_outer(&terms, q.vars)
}

fn from_r(p: &R, vars: usize) -> LPoly {
    fn walk(p: &R, exp: &mut Vec<i64>, out: &mut LPoly) {
        match p {
            R::C(c) => {
                if !c.is_zero() {
                    out.insert(exp.clone(), c.clone());
                }
            }
            R::P(v) => {
                for (d, c) in v.iter().enumerate() {
                    exp.push(d as i64);
                    walk(c, exp, out);
                    exp.pop();
                }
            }
        }
    }
    let mut out = LPoly::zero(vars);
    let mut exp = Vec::new();
    walk(p, &mut exp, &mut out);
    out
}

/// Gcd of two Laurent polynomials, up to the canonical unit normalization.
pub fn lgcd(a: &LPoly, b: &LPoly) -> LPoly {
    assert_eq!(a.vars(), b.vars());
    if a.is_zero() {
        return b.unit_normal();
    }
    if b.is_zero() {
        return a.unit_normal();
    }
    let g = gcd_r(&to_r(a), &to_r(b), a.vars());
    from_r(&g, a.vars()).unit_normal()
}

/// Determinant of a square matrix of Laurent polynomials (Laplace; desk
/// scale only).
pub fn lpoly_det(m: &[Vec<LPoly>]) -> LPoly {
    let n = m.len();
    let vars = if n == 0 { 0 } else { m[0][0].vars() };
    if n == 0 {
        return LPoly::one(vars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = LPoly::zero(vars);
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let sub = lpoly_det(&minor);
        let term = top.mul(&sub);
        det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize) -> LPoly {
        LPoly::monomial(2, i, 1)
    }

    #[test]
    fn ring_ops() {
        let p = t(0).add(&LPoly::one(2));
        let q = t(0).sub(&LPoly::one(2));
        let prod = p.mul(&q);
        let expect = t(0).mul(&t(0)).sub(&LPoly::one(2));
        assert_eq!(prod, expect);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn unit_normalization() {
        // -t1^-1 + 1 normalizes to t1 - 1
        let p = LPoly::monomial(1, 0, -1).neg().add(&LPoly::one(1));
        let n = p.unit_normal();
        let expect = LPoly::monomial(1, 0, 1).sub(&LPoly::one(1));
        assert_eq!(n, expect.unit_normal());
    }

    #[test]
    fn gcd_univariate() {
        // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1
        let one = LPoly::one(1);
        let tt = LPoly::monomial(1, 0, 1);
        let a = tt.mul(&tt).sub(&one);
        let b = tt.mul(&tt).sub(&tt.add(&tt)).add(&one);
        let g = lgcd(&a, &b);
        assert_eq!(g, tt.sub(&one).unit_normal());
    }

    #[test]
    fn gcd_bivariate() {
        // gcd((t1-1)(t2+1), (t1-1)t2) = t1 - 1
        let one = LPoly::one(2);
        let a = t(0).sub(&one).mul(&t(1).add(&one));
        let b = t(0).sub(&one).mul(&t(1));
        let g = lgcd(&a, &b);
        assert_eq!(g, t(0).sub(&one).unit_normal());
        // coprime pair
        let g2 = lgcd(&t(0).sub(&one), &t(1).sub(&one));
        assert!(g2.is_one(), "got {:?}", g2);
    }

    #[test]
    fn det_small() {
        let one = LPoly::one(1);
        let tt = LPoly::monomial(1, 0, 1);
        let m = vec![vec![tt.clone(), one.clone()], vec![one.clone(), tt.clone()]];
        let d = lpoly_det(&m);
        assert_eq!(d, tt.mul(&tt).sub(&one));
    }
}
