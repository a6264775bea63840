//! Named mapping classes: twists, spins, slides, handle moves, and the
//! generating-set tables.
//!
//! Generator-name grammar (CLI and certificates): `iota_1`, `lambda_2`,
//! `Lambda_3`, `braid_2`, `s_1_1`, `S_1_2`, `Sp_1_2`, `tau_1`, `omega_1`,
//! `rho_1`, `rho_1_3`, `theta_1_2`, `eta_1_2`, `xi_1_2`, `zeta_1_2`,
//! `L_1_1`, `M_1_1`, `twist:<curve-name>`; exponents as `^-1`, `^2`, etc.
//! A word is whitespace-separated tokens, rightmost acting first.

use crate::autrep::Automorphism;
use crate::surface::{catalog, sets, CurveCatalog, CurveKind, Obj, Signature};
use crate::twists;
use crate::word::Word;
use std::collections::HashMap;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    UnknownName { token: String, position: usize },
    IndexOutOfRange { token: String, position: usize, detail: String },
    BadExponent { token: String, position: usize },
    NotASlideCurve(String),
    NotALoopOf { curve: String, handle: u32 },
    NoCrossingData(String),
    CrossingCount { arc: u32, count: u32 },
}

impl std::fmt::Display for GenError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenError::UnknownName { token, position } => {
                write!(f, "token {} (`{}`): unknown generator name", position + 1, token)
            }
            GenError::IndexOutOfRange { token, position, detail } => {
                write!(f, "token {} (`{}`): {}", position + 1, token, detail)
            }
            GenError::BadExponent { token, position } => {
                write!(f, "token {} (`{}`): bad exponent", position + 1, token)
            }
            GenError::NotASlideCurve(name) => write!(f, "`{}` is not an arc-slide curve", name),
            GenError::NotALoopOf { curve, handle } => {
                write!(f, "`{}` is not a loop of handle {}", curve, handle)
            }
            GenError::NoCrossingData(w) => {
                write!(f, "curve `{}` carries no crossing data; only catalog curves twist", w)
            }
            GenError::CrossingCount { arc, count } => {
                write!(f, "slide curve crosses arc {} in {} points (need exactly 1)", arc, count)
            }
        }
    }
}

impl std::error::Error for GenError {}

/// A word in named generators over a signature, with a lazily realized
/// automorphism.
#[derive(Debug)]
pub struct MappingClass {
    sig: Signature,
    gen_word: Vec<(String, i64)>,
    cached: OnceLock<Automorphism>,
}

impl Clone for MappingClass {
    fn clone(&self) -> Self {
        MappingClass {
            sig: self.sig,
            gen_word: self.gen_word.clone(),
            cached: OnceLock::new(),
        }
    }
}

impl MappingClass {
    pub fn identity(sig: &Signature) -> Self {
        MappingClass { sig: *sig, gen_word: Vec::new(), cached: OnceLock::new() }
    }

    pub fn from_tokens(sig: &Signature, tokens: Vec<(String, i64)>) -> Self {
        MappingClass { sig: *sig, gen_word: tokens, cached: OnceLock::new() }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn gen_word(&self) -> &[(String, i64)] {
        &self.gen_word
    }

    /// `iota_1^2 lambda_1` notation.
    pub fn expression(&self) -> String {
        expression_string(&self.gen_word)
    }

    /// Compose `self ∘ other` as words.
    pub fn then_first(&self, other: &MappingClass) -> MappingClass {
        let mut toks = self.gen_word.clone();
        toks.extend(other.gen_word.iter().cloned());
        MappingClass::from_tokens(&self.sig, toks)
    }

    pub fn inverse(&self) -> MappingClass {
        let toks = self
            .gen_word
            .iter()
            .rev()
            .map(|(n, e)| (n.clone(), -e))
            .collect();
        MappingClass::from_tokens(&self.sig, toks)
    }
}

pub fn expression_string(tokens: &[(String, i64)]) -> String {
    if tokens.is_empty() {
        return "<identity>".to_string();
    }
    tokens
        .iter()
        .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{}^{}", n, e) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// An arc-slide curve: a simple closed curve crossing the shadow of one arc
/// in a single point, enclosing the listed objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSlideCurve {
    pub through_arc: u32,
    pub enclosed: Vec<Obj>,
}

/// All named generators of a signature, realized eagerly.
pub struct GeneratorTable {
    sig: Signature,
    catalog: CurveCatalog,
    prims: HashMap<String, Automorphism>,
}

fn toggle(enclosed: &[Obj], p: u32) -> Vec<Obj> {
    let mut v: Vec<Obj> = enclosed.to_vec();
    if let Some(k) = v.iter().position(|o| *o == Obj::Punct(p)) {
        v.remove(k);
    } else {
        v.push(Obj::Punct(p));
    }
    v
}

impl GeneratorTable {
    pub fn new(sig: &Signature) -> Self {
        let mut table =
            GeneratorTable { sig: *sig, catalog: catalog(sig), prims: HashMap::new() };
        table.build();
        table
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn catalog(&self) -> &CurveCatalog {
        &self.catalog
    }

    fn insert(&mut self, name: String, a: Automorphism) {
        self.prims.insert(name, a);
    }

    fn build(&mut self) {
        let sig = self.sig;
        let (g, n) = (sig.genus(), sig.arcs());
        for i in 1..=n {
            let a = twists::braid_half_twist(&sig, 2 * i - 1, 1);
            self.insert(format!("iota_{}", i), a);
        }
        for i in 1..n {
            self.insert(format!("lambda_{}", i), twists::pair_swap(&sig, i, 1));
        }
        for k in 1..2 * n {
            self.insert(format!("braid_{}", k), twists::braid_half_twist(&sig, k, 1));
        }
        for l in 1..=g {
            self.insert(format!("tau_{}", l), twists::meridian_twist(&sig, l, 1));
            self.insert(format!("omega_{}", l), twists::omega(&sig, l, 1));
        }
        for l in 1..g {
            self.insert(format!("rho_{}", l), twists::handle_swap(&sig, l, 1));
        }
        // spins s_{ji}
        for j in 1..=n {
            for i in 1..=n {
                let a = if i == j {
                    twists::enclosing_twist(&sig, &sets::pair(j), 1)
                } else {
                    let inner = twists::enclosing_twist(&sig, &sets::pair(i), -1);
                    let outer = twists::enclosing_twist(&sig, &sets::spin_out(j, i), 1);
                    inner.compose(&outer)
                };
                self.insert(format!("s_{}_{}", j, i), a);
            }
        }
        // arc slides S_{ji}, S'_{ji}
        for j in 1..=n {
            for i in 1..=n {
                if i == j {
                    continue;
                }
                let s = self
                    .slide_arc(j, &ArcSlideCurve {
                        through_arc: j,
                        enclosed: vec![Obj::Punct(2 * j - 1), Obj::Punct(2 * i)],
                    })
                    .expect("catalog track curve");
                self.insert(format!("S_{}_{}", j, i), s);
                let sp = self
                    .slide_arc(j, &ArcSlideCurve {
                        through_arc: j,
                        enclosed: vec![Obj::Punct(2 * j), Obj::Punct(2 * i - 1)],
                    })
                    .expect("catalog primed track curve");
                self.insert(format!("Sp_{}_{}", j, i), sp);
            }
        }
        // disc slides
        for i in 1..=g {
            for k in 1..=n {
                let xi = self.sigma_slide(i, &CurveKind::Enclosing(sets::f_loop(i, k))).unwrap();
                self.insert(format!("xi_{}_{}", i, k), xi);
                let zeta = self.sigma_slide(i, &CurveKind::Enclosing(sets::l_loop(i, k))).unwrap();
                self.insert(format!("zeta_{}_{}", i, k), zeta);
                let m = self
                    .slide_arc(k, &ArcSlideCurve { through_arc: k, enclosed: vec![Obj::FootL(i)] })
                    .unwrap();
                let nui = twists::nu(&sig, i, 1);
                let l = nui.compose(&m).compose(&nui.invert().unwrap());
                self.insert(format!("M_{}_{}", k, i), m);
                self.insert(format!("L_{}_{}", k, i), l);
            }
            for j in 1..=g {
                if i == j {
                    continue;
                }
                let eta = self.sigma_slide(i, &CurveKind::Enclosing(sets::g_loop(i, j))).unwrap();
                let nuj = twists::nu(&sig, j, 1);
                let theta = nuj.compose(&eta).compose(&nuj.invert().unwrap());
                self.insert(format!("eta_{}_{}", i, j), eta);
                self.insert(format!("theta_{}_{}", i, j), theta);
            }
        }
        // raw twists along catalog curves
        let kinds: Vec<(String, CurveKind)> = self
            .catalog
            .iter()
            .map(|c| (format!("twist:{}", c.name), c.kind.clone()))
            .collect();
        for (name, kind) in kinds {
            let t = twists::dehn_twist_kind(&sig, &kind, 1);
            self.insert(name, t);
        }
    }

    /// Right-handed Dehn twist along a named catalog curve.
    pub fn dehn_twist(&self, curve: &str, handedness: i64) -> Result<Automorphism, GenError> {
        let t = self
            .prims
            .get(&format!("twist:{}", curve))
            .ok_or_else(|| GenError::NoCrossingData(curve.to_string()))?;
        Ok(t.pow(handedness).unwrap())
    }

    /// Dehn twist along a user word: supported only when the word matches a
    /// catalog curve (those carry crossing data).
    pub fn dehn_twist_word(&self, w: &Word, handedness: i64) -> Result<Automorphism, GenError> {
        let target = w.cyclic_normal();
        for c in self.catalog.iter() {
            if c.word.cyclic_normal() == target {
                return self.dehn_twist(&c.name, handedness);
            }
        }
        Err(GenError::NoCrossingData(self.sig.display_word(w)))
    }

    /// Spin `s_{P,c} = t_{c1}^{-1} t_{c2}` from the two annulus boundary
    /// recipes. Identical recipes give the identity.
    pub fn spin(&self, c1: &CurveKind, c2: &CurveKind) -> Automorphism {
        if c1 == c2 {
            return Automorphism::identity(&self.sig);
        }
        let t1 = twists::dehn_twist_kind(&self.sig, c1, -1);
        let t2 = twists::dehn_twist_kind(&self.sig, c2, 1);
        t1.compose(&t2)
    }

    /// Slide of arc `j` along a curve crossing its shadow once: the product
    /// of the two boundary spins of the endpoints.
    pub fn slide_arc(&self, j: u32, curve: &ArcSlideCurve) -> Result<Automorphism, GenError> {
        if curve.through_arc != j {
            return Err(GenError::CrossingCount { arc: j, count: 0 });
        }
        let p1 = Obj::Punct(2 * j - 1);
        let p2 = Obj::Punct(2 * j);
        if curve.enclosed.contains(&p1) && curve.enclosed.contains(&p2) {
            return Err(GenError::CrossingCount { arc: j, count: 3 });
        }
        let mid = curve.enclosed.clone();
        let left = toggle(&mid, 2 * j - 1);
        let right = toggle(&mid, 2 * j);
        // s_{P_{j1}, c_1} then s_{P_{j2}, c_2}
        let spin1 = twists::enclosing_twist(&self.sig, &left, -1)
            .compose(&twists::enclosing_twist(&self.sig, &mid, 1));
        let spin2 = twists::enclosing_twist(&self.sig, &mid, -1)
            .compose(&twists::enclosing_twist(&self.sig, &right, 1));
        Ok(spin1.compose(&spin2))
    }

    fn sigma_slide(&self, i: u32, kind: &CurveKind) -> Result<Automorphism, GenError> {
        match kind {
            CurveKind::Enclosing(objs) => {
                if !objs.contains(&Obj::FootL(i)) {
                    return Err(GenError::NotALoopOf { curve: format!("{:?}", objs), handle: i });
                }
                let rest: Vec<Obj> = objs.iter().copied().filter(|o| *o != Obj::FootL(i)).collect();
                let inner = twists::enclosing_twist(&self.sig, &rest, -1);
                let outer = twists::enclosing_twist(&self.sig, objs, 1);
                Ok(inner.compose(&outer))
            }
            CurveKind::NuImage(l, base) => {
                if *l == i {
                    return Err(GenError::NotALoopOf { curve: format!("{:?}", kind), handle: i });
                }
                let c = twists::nu(&self.sig, *l, 1);
                let s = self.sigma_slide(i, base)?;
                Ok(c.compose(&s).compose(&c.invert().unwrap()))
            }
            CurveKind::Longitude(_) => {
                Err(GenError::NotALoopOf { curve: "longitude".to_string(), handle: i })
            }
        }
    }

    /// Slide of the meridian disc of handle `i` along a catalog loop; the
    /// primed form slides the partner disc and is computed by conjugation
    /// with `omega_i`.
    pub fn slide_disc(
        &self,
        i: u32,
        loop_name: &str,
        primed: bool,
    ) -> Result<Automorphism, GenError> {
        let c = self
            .catalog
            .get(loop_name)
            .ok_or_else(|| GenError::NotALoopOf { curve: loop_name.to_string(), handle: i })?;
        let s = self.sigma_slide(i, &c.kind)?;
        if primed {
            let om = twists::omega(&self.sig, i, 1);
            Ok(om.invert().unwrap().compose(&s).compose(&om))
        } else {
            Ok(s)
        }
    }

    pub fn primitive(&self, name: &str) -> Option<&Automorphism> {
        self.prims.get(name)
    }

    /// Expand a token into primitive tokens (composites: `Lambda_i`,
    /// `rho_i_j`).
    fn expand(&self, name: &str) -> Option<Vec<(String, i64)>> {
        if self.prims.contains_key(name) {
            return Some(vec![(name.to_string(), 1)]);
        }
        let (g, n) = (self.sig.genus(), self.sig.arcs());
        if let Some(rest) = name.strip_prefix("Lambda_") {
            let i: u32 = rest.parse().ok()?;
            if i < 1 || i > n {
                return None;
            }
            return Some((1..i).map(|k| (format!("lambda_{}", k), -1)).collect());
        }
        if let Some(rest) = name.strip_prefix("rho_") {
            let parts: Vec<&str> = rest.split('_').collect();
            if parts.len() == 2 {
                let i: u32 = parts[0].parse().ok()?;
                let j: u32 = parts[1].parse().ok()?;
                if i < 1 || j <= i || j > g {
                    return None;
                }
                let mut toks = Vec::new();
                for l in i..j {
                    toks.push((format!("rho_{}", l), 1));
                }
                for l in (i..j - 1).rev() {
                    toks.push((format!("rho_{}", l), -1));
                }
                return Some(toks);
            }
        }
        None
    }

    /// Look up a named mapping class.
    pub fn named(&self, name: &str) -> Result<MappingClass, GenError> {
        self.expand(name)
            .map(|_| MappingClass::from_tokens(&self.sig, vec![(name.to_string(), 1)]))
            .ok_or_else(|| self.name_error(name, 0))
    }

    fn name_error(&self, token: &str, position: usize) -> GenError {
        // distinguish "unknown family" from "known family, bad index"
        let fam = token.split(['_', ':']).next().unwrap_or(token);
        let known = [
            "iota", "lambda", "Lambda", "braid", "s", "S", "Sp", "tau", "omega", "rho", "theta",
            "eta", "xi", "zeta", "L", "M", "twist",
        ];
        if known.contains(&fam) {
            GenError::IndexOutOfRange {
                token: token.to_string(),
                position,
                detail: format!(
                    "index out of range for (g, n) = ({}, {})",
                    self.sig.genus(),
                    self.sig.arcs()
                ),
            }
        } else {
            GenError::UnknownName { token: token.to_string(), position }
        }
    }

    /// Parse a generator word. Left-to-right tokens compose with the
    /// rightmost acting first.
    pub fn parse_class(&self, text: &str) -> Result<MappingClass, GenError> {
        let mut tokens = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            let (name, exp) = match tok.rsplit_once('^') {
                Some((nm, e)) => {
                    let exp: i64 = e.parse().map_err(|_| GenError::BadExponent {
                        token: tok.to_string(),
                        position: pos,
                    })?;
                    (nm, exp)
                }
                None => (tok, 1),
            };
            if self.expand(name).is_none() {
                return Err(self.name_error(tok, pos));
            }
            if exp != 0 {
                tokens.push((name.to_string(), exp));
            }
        }
        Ok(MappingClass::from_tokens(&self.sig, tokens))
    }

    /// Realize a mapping class as an automorphism (cached).
    pub fn realize(&self, mc: &MappingClass) -> Result<Automorphism, GenError> {
        if let Some(a) = mc.cached.get() {
            return Ok(a.clone());
        }
        let mut acc = Automorphism::identity(&self.sig);
        for (pos, (name, exp)) in mc.gen_word.iter().enumerate() {
            let toks = self.expand(name).ok_or_else(|| self.name_error(name, pos))?;
            let mut part = Automorphism::identity(&self.sig);
            for (pname, pexp) in toks {
                let prim = self.prims.get(&pname).expect("expansion yields primitives");
                part = part.compose(&prim.pow(pexp).unwrap());
            }
            acc = acc.compose(&part.pow(*exp).unwrap());
        }
        let _ = mc.cached.set(acc.clone());
        Ok(acc)
    }

    /// The generating set of the corresponding finiteness theorem, in the
    /// fixed tie-break order used by the membership search.
    pub fn generating_set(&self, pure: bool) -> Vec<String> {
        let (g, n) = (self.sig.genus(), self.sig.arcs());
        let mut out = Vec::new();
        if pure {
            if g == 0 {
                for j in 1..=n {
                    out.push(format!("s_{}_{}", j, j));
                }
                for j in 1..=n {
                    for i in 1..=n {
                        if i != j {
                            out.push(format!("S_{}_{}", j, i));
                            out.push(format!("Sp_{}_{}", j, i));
                        }
                    }
                }
            } else {
                out.push("tau_1".into());
                out.push("omega_1".into());
                for i in 1..g {
                    out.push(format!("rho_{}", i));
                }
                if g >= 2 {
                    out.push("theta_1_2".into());
                    out.push("eta_1_2".into());
                }
                for k in 1..=n {
                    out.push(format!("xi_1_{}", k));
                    out.push(format!("zeta_1_{}", k));
                }
                for k in 1..=n {
                    out.push(format!("s_{}_{}", k, k));
                }
                for k in 1..=n {
                    for l in 1..=n {
                        if k != l {
                            out.push(format!("S_{}_{}", k, l));
                            out.push(format!("Sp_{}_{}", k, l));
                        }
                    }
                }
                for k in 1..=n {
                    out.push(format!("L_{}_1", k));
                }
            }
        } else if g == 0 {
            if n >= 2 {
                out.push("iota_1".into());
                for k in 1..n {
                    out.push(format!("lambda_{}", k));
                }
                out.push("s_1_1".into());
                out.push("S_1_2".into());
                out.push("Sp_1_2".into());
            } else {
                // the pure group is trivial on the twice-punctured sphere
                out.push("iota_1".into());
                out.push("s_1_1".into());
            }
        } else {
            out.push("iota_1".into());
            for k in 1..n {
                out.push(format!("lambda_{}", k));
            }
            out.push("tau_1".into());
            out.push("omega_1".into());
            for i in 1..g {
                out.push(format!("rho_{}", i));
            }
            if g >= 2 {
                out.push("theta_1_2".into());
                out.push("eta_1_2".into());
            }
            out.push("xi_1_1".into());
            if n >= 2 {
                out.push("S_1_2".into());
            }
            out.push("L_1_1".into());
        }
        out
    }
}
