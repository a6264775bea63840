//! Combinatorial model of the 2n-punctured genus-g surface.
//!
//! The fundamental group of the complement of the punctures is free of rank
//! `2g + 2n - 1` on `a_1, b_1, ..., a_g, b_g, u_1, ..., u_{2n-1}`, where
//! `u_{2i+j-2}` is a loop around the puncture `P_{ij}`. The loop around the
//! last puncture is the derived word `U_{2n}` making the surface relator
//! `[a_1,b_1]...[a_g,b_g] u_1...u_{2n}` trivial.
//!
//! The planar model puts the g handles in a row on the left and the 2n
//! punctures in a row on the right, ordered `P_11, P_12, P_21, ...`. Each
//! handle contributes two feet discs; `b_l` is the meridian circle around the
//! left foot of handle `l` and `a_l` runs through the handle once.

use crate::word::{display_word, parse_word, Letter, Word};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigError {
    NoArcs,
    BadGenerator(String),
    IndexOutOfRange(String),
}

impl std::fmt::Display for SigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SigError::NoArcs => write!(f, "n = 0 is unsupported (need at least one arc)"),
            SigError::BadGenerator(s) => write!(f, "unknown generator `{}`", s),
            SigError::IndexOutOfRange(s) => write!(f, "index out of range: {}", s),
        }
    }
}

impl std::error::Error for SigError {}

/// Surface signature: genus `g >= 0` and `n >= 1` arcs (so `2n` punctures).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    genus: u32,
    arcs: u32,
}

impl Signature {
    pub fn new(genus: u32, arcs: u32) -> Result<Self, SigError> {
        if arcs == 0 {
            return Err(SigError::NoArcs);
        }
        Ok(Signature { genus, arcs })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of arcs n; there are 2n punctures.
    pub fn arcs(&self) -> u32 {
        self.arcs
    }

    pub fn punctures(&self) -> u32 {
        2 * self.arcs
    }

    /// Rank of the free group: 2g + 2n − 1.
    pub fn rank(&self) -> usize {
        (2 * self.genus + 2 * self.arcs - 1) as usize
    }

    /// Generator index of `a_l`, `l = 1..=g`.
    pub fn a(&self, l: u32) -> u32 {
        debug_assert!(l >= 1 && l <= self.genus);
        2 * (l - 1)
    }

    /// Generator index of `b_l`, `l = 1..=g`.
    pub fn b(&self, l: u32) -> u32 {
        debug_assert!(l >= 1 && l <= self.genus);
        2 * (l - 1) + 1
    }

    /// Generator index of `u_j`, `j = 1..=2n-1`.
    pub fn u(&self, j: u32) -> u32 {
        debug_assert!(j >= 1 && j < self.punctures());
        2 * self.genus + j - 1
    }

    pub fn gen_name(&self, idx: u32) -> String {
        let g2 = 2 * self.genus;
        if idx < g2 {
            let l = idx / 2 + 1;
            if idx % 2 == 0 {
                format!("a{}", l)
            } else {
                format!("b{}", l)
            }
        } else {
            format!("u{}", idx - g2 + 1)
        }
    }

    pub fn parse_gen(&self, name: &str) -> Option<u32> {
        let (kind, num) = name.split_at(1);
        let k: u32 = num.parse().ok()?;
        match kind {
            "a" if k >= 1 && k <= self.genus => Some(self.a(k)),
            "b" if k >= 1 && k <= self.genus => Some(self.b(k)),
            "u" if k >= 1 && k < self.punctures() => Some(self.u(k)),
            _ => None,
        }
    }

    /// Parse a word literal such as `a1 b1^-1 u3` over this alphabet.
    pub fn parse_word(&self, text: &str) -> Result<Word, SigError> {
        parse_word(text, |s| self.parse_gen(s)).map_err(SigError::BadGenerator)
    }

    pub fn display_word(&self, w: &Word) -> String {
        display_word(w, |i| self.gen_name(i))
    }

    /// `[a_l, b_l] = a_l b_l a_l^{-1} b_l^{-1}`.
    pub fn handle_word(&self, l: u32) -> Word {
        let a = Word::gen(self.a(l));
        let b = Word::gen(self.b(l));
        a.concat(&b).concat(&a.invert()).concat(&b.invert())
    }

    /// `m_l = a_l b_l a_l^{-1}`, the left-foot circle conjugated through the
    /// handle.
    pub fn foot_word(&self, l: u32) -> Word {
        let a = Word::gen(self.a(l));
        let b = Word::gen(self.b(l));
        a.concat(&b).concat(&a.invert())
    }

    /// `V = [a_1,b_1]...[a_g,b_g] u_1...u_{2n-1}` (so the 2n-th puncture loop
    /// is `V^{-1}`).
    pub fn relator_prefix(&self) -> Word {
        let mut w = Word::empty();
        for l in 1..=self.genus {
            w.extend_reduced(&self.handle_word(l));
        }
        for j in 1..self.punctures() {
            w.push_reduced(Letter::new(self.u(j), true));
        }
        w
    }

    /// Loop around the 2n-th puncture: `U_{2n} = V^{-1}`.
    pub fn last_loop(&self) -> Word {
        self.relator_prefix().invert()
    }

    /// Loop around the j-th puncture in row order, `j = 1..=2n`.
    pub fn puncture_loop_by_index(&self, j: u32) -> Result<Word, SigError> {
        if j == 0 || j > self.punctures() {
            return Err(SigError::IndexOutOfRange(format!(
                "puncture {} of {}",
                j,
                self.punctures()
            )));
        }
        if j < self.punctures() {
            Ok(Word::gen(self.u(j)))
        } else {
            Ok(self.last_loop())
        }
    }

    /// Loop around `P_{ij}`: the puncture with row label `2i + j - 2`.
    pub fn puncture_loop(&self, i: u32, j: u32) -> Result<Word, SigError> {
        if i == 0 || i > self.arcs || !(j == 1 || j == 2) {
            return Err(SigError::IndexOutOfRange(format!("P_{{{},{}}}", i, j)));
        }
        self.puncture_loop_by_index(2 * i + j - 2)
    }

    /// All 2n puncture loop words in row order.
    pub fn all_puncture_loops(&self) -> Vec<Word> {
        (1..=self.punctures())
            .map(|j| self.puncture_loop_by_index(j).unwrap())
            .collect()
    }

    /// Algebraic intersection pairing of two homology vectors on the closed
    /// part: sum over handles of `v[a]w[b] - v[b]w[a]`.
    pub fn intersection_pairing(&self, v: &[i64], w: &[i64]) -> i64 {
        let mut s = 0;
        for l in 1..=self.genus {
            let (ia, ib) = (self.a(l) as usize, self.b(l) as usize);
            s += v[ia] * w[ib] - v[ib] * w[ia];
        }
        s
    }
}

/// One object of the planar row: a full handle, a single foot, or a puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obj {
    /// Both feet of handle `l` (1-based).
    Handle(u32),
    /// Left foot of handle `l`: the meridian disc side.
    FootL(u32),
    /// Puncture `j` (1-based, `1..=2n`).
    Punct(u32),
}

impl Obj {
    /// Total order along the row. Feet of handle l sit at 4l-3 (left) and
    /// 4l-1 (right); punctures after all handles.
    pub fn pos(&self, sig: &Signature) -> u32 {
        match *self {
            Obj::Handle(l) | Obj::FootL(l) => 4 * l - 3,
            Obj::Punct(j) => 4 * sig.genus + j,
        }
    }

    /// Row word contributed by the object: `[a,b]` for a handle, `m_l` or
    /// `b_l` for a left foot (see `MIXED_FOOT_LETTER`), `u_j` for a puncture.
    pub fn letter(&self, sig: &Signature) -> Word {
        match *self {
            Obj::Handle(l) => sig.handle_word(l),
            Obj::FootL(l) => sig.foot_word(l),
            Obj::Punct(j) => sig.puncture_loop_by_index(j).unwrap(),
        }
    }
}

/// Construction recipe for a catalog curve. All twists along catalog curves
/// are produced from these recipes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveKind {
    /// Lower-corridor curve enclosing the listed objects (row order).
    Enclosing(Vec<Obj>),
    /// The longitude `alpha_l` of handle `l` (word `a_l`).
    Longitude(u32),
    /// Image of the base curve under `nu_l = t_alpha t_beta t_alpha` on
    /// handle `l`; turns a meridian-side loop into a through-handle loop.
    NuImage(u32, Box<CurveKind>),
}

/// A named curve: cyclically reduced word plus its homology vector.
#[derive(Debug, Clone)]
pub struct CatalogCurve {
    pub name: String,
    pub word: Word,
    pub homology: Vec<i64>,
    pub kind: CurveKind,
}

/// Finite catalog of the named curves of the planar model.
#[derive(Debug, Clone)]
pub struct CurveCatalog {
    sig: Signature,
    curves: Vec<CatalogCurve>,
}

/// Substitution computing the action of `nu_l` on a word:
/// `a_l -> a_l b_l a_l^{-1}`, `b_l -> a_l^{-1}`.
pub fn nu_substitute(sig: &Signature, l: u32, w: &Word) -> Word {
    let a = sig.a(l);
    let b = sig.b(l);
    let mut out = Word::empty();
    for &let_ in w.letters() {
        let img = if let_.base() == a {
            sig.foot_word(l)
        } else if let_.base() == b {
            Word::gen_inv(a)
        } else {
            Word::reduce([let_])
        };
        let img = if let_.is_positive() { img } else { img.invert() };
        out.extend_reduced(&img);
    }
    out
}

pub fn curve_word(sig: &Signature, kind: &CurveKind) -> Word {
    match kind {
        CurveKind::Enclosing(objs) => {
            let mut sorted = objs.clone();
            sorted.sort_by_key(|o| o.pos(sig));
            let mut w = Word::empty();
            for o in &sorted {
                w.extend_reduced(&o.letter(sig));
            }
            w
        }
        CurveKind::Longitude(l) => Word::gen(sig.a(*l)),
        CurveKind::NuImage(l, base) => nu_substitute(sig, *l, &curve_word(sig, base)),
    }
}

impl CurveCatalog {
    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn get(&self, name: &str) -> Option<&CatalogCurve> {
        self.curves.iter().find(|c| c.name == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.iter().map(|c| c.name.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = &CatalogCurve> {
        self.curves.iter()
    }
}

fn push_curve(sig: &Signature, curves: &mut Vec<CatalogCurve>, name: String, kind: CurveKind) {
    let word = curve_word(sig, &kind);
    let (core, _) = word.cyclic_reduce();
    let homology = core.abelianize(sig.rank());
    curves.push(CatalogCurve { name, word: core, homology, kind });
}

/// Enclosing-set helpers used by the generator tables.
pub mod sets {
    use super::Obj;

    /// The pair of punctures bounding arc `k`.
    pub fn pair(k: u32) -> Vec<Obj> {
        vec![Obj::Punct(2 * k - 1), Obj::Punct(2 * k)]
    }

    /// Spin target of `s_{ji}`: `P_{j2}` together with pair `i`.
    pub fn spin_out(j: u32, i: u32) -> Vec<Obj> {
        vec![Obj::Punct(2 * j), Obj::Punct(2 * i - 1), Obj::Punct(2 * i)]
    }

    /// Outer twist curve of the arc slide `S_{ji}`: pair `j` and `P_{i2}`.
    pub fn track_out(j: u32, i: u32) -> Vec<Obj> {
        vec![Obj::Punct(2 * j - 1), Obj::Punct(2 * j), Obj::Punct(2 * i)]
    }

    /// Outer twist curve of the primed slide `S'_{ji}`: pair `j` and `P_{i1}`.
    pub fn track_prime_out(j: u32, i: u32) -> Vec<Obj> {
        vec![Obj::Punct(2 * j - 1), Obj::Punct(2 * j), Obj::Punct(2 * i - 1)]
    }

    /// `f_{ik}` outer curve: left foot of handle `i` with `P_{k1}`.
    pub fn f_loop(i: u32, k: u32) -> Vec<Obj> {
        vec![Obj::FootL(i), Obj::Punct(2 * k - 1)]
    }

    /// `l_{ik}` outer curve: left foot of handle `i` with `P_{k2}`.
    pub fn l_loop(i: u32, k: u32) -> Vec<Obj> {
        vec![Obj::FootL(i), Obj::Punct(2 * k)]
    }

    /// `g_{ij}` outer curve: left feet of handles `i` and `j`.
    pub fn g_loop(i: u32, j: u32) -> Vec<Obj> {
        vec![Obj::FootL(i), Obj::FootL(j)]
    }

    /// `g'_{ki}` outer curve: left foot of handle `i` with pair `k`.
    pub fn gp_loop(k: u32, i: u32) -> Vec<Obj> {
        vec![Obj::FootL(i), Obj::Punct(2 * k - 1), Obj::Punct(2 * k)]
    }
}

/// Build the finite curve catalog for a signature.
pub fn catalog(sig: &Signature) -> CurveCatalog {
    let g = sig.genus();
    let n = sig.arcs();
    let mut curves = Vec::new();
    for l in 1..=g {
        push_curve(sig, &mut curves, format!("alpha_{}", l), CurveKind::Longitude(l));
        push_curve(
            sig,
            &mut curves,
            format!("beta_{}", l),
            CurveKind::Enclosing(vec![Obj::FootL(l)]),
        );
        push_curve(
            sig,
            &mut curves,
            format!("dT_{}", l),
            CurveKind::Enclosing(vec![Obj::Handle(l)]),
        );
        if l < g {
            push_curve(
                sig,
                &mut curves,
                format!("dC_{}", l),
                CurveKind::Enclosing(vec![Obj::Handle(l), Obj::Handle(l + 1)]),
            );
        }
    }
    for k in 1..=n {
        push_curve(sig, &mut curves, format!("pair_{}", k), CurveKind::Enclosing(sets::pair(k)));
    }
    for j in 1..=n {
        for i in 1..=n {
            if i == j {
                // spin curve of s_{jj}; same support as pair_j
                push_curve(
                    sig,
                    &mut curves,
                    format!("spin_{}_{}", j, j),
                    CurveKind::Enclosing(sets::pair(j)),
                );
            } else {
                push_curve(
                    sig,
                    &mut curves,
                    format!("spin_{}_{}", j, i),
                    CurveKind::Enclosing(sets::spin_out(j, i)),
                );
                push_curve(
                    sig,
                    &mut curves,
                    format!("track_{}_{}", j, i),
                    CurveKind::Enclosing(sets::track_out(j, i)),
                );
                push_curve(
                    sig,
                    &mut curves,
                    format!("trackp_{}_{}", j, i),
                    CurveKind::Enclosing(sets::track_prime_out(j, i)),
                );
            }
        }
    }
    for i in 1..=g {
        for k in 1..=n {
            push_curve(sig, &mut curves, format!("f_{}_{}", i, k), CurveKind::Enclosing(sets::f_loop(i, k)));
            push_curve(sig, &mut curves, format!("l_{}_{}", i, k), CurveKind::Enclosing(sets::l_loop(i, k)));
            push_curve(sig, &mut curves, format!("gp_{}_{}", k, i), CurveKind::Enclosing(sets::gp_loop(k, i)));
            push_curve(
                sig,
                &mut curves,
                format!("ep_{}_{}", k, i),
                CurveKind::NuImage(i, Box::new(CurveKind::Enclosing(sets::gp_loop(k, i)))),
            );
        }
        for j in 1..=g {
            if i != j {
                push_curve(sig, &mut curves, format!("g_{}_{}", i, j), CurveKind::Enclosing(sets::g_loop(i, j)));
                push_curve(
                    sig,
                    &mut curves,
                    format!("e_{}_{}", i, j),
                    CurveKind::NuImage(j, Box::new(CurveKind::Enclosing(sets::g_loop(i, j)))),
                );
            }
        }
    }
    CurveCatalog { sig: *sig, curves }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_examples() {
        assert!(Signature::new(0, 0).is_err());
        let s = Signature::new(0, 1).unwrap();
        assert_eq!(s.rank(), 1);
        let s = Signature::new(0, 2).unwrap();
        assert_eq!(s.rank(), 3);
        let s = Signature::new(2, 2).unwrap();
        assert_eq!(s.rank(), 7);
    }

    #[test]
    fn puncture_loops_sphere() {
        let s = Signature::new(0, 2).unwrap();
        assert_eq!(s.puncture_loop(1, 1).unwrap(), s.parse_word("u1").unwrap());
        // fourth loop on the sphere is (u1 u2 u3)^{-1}
        assert_eq!(
            s.puncture_loop(2, 2).unwrap(),
            s.parse_word("u3^-1 u2^-1 u1^-1").unwrap()
        );
        assert!(s.puncture_loop(3, 1).is_err());
        assert!(s.puncture_loop(1, 3).is_err());
    }

    #[test]
    fn puncture_loops_torus() {
        let s = Signature::new(1, 1).unwrap();
        // second loop is ([a1,b1] u1)^{-1}; total homology of all loops is 0
        let l2 = s.puncture_loop(1, 2).unwrap();
        assert_eq!(l2, s.parse_word("u1^-1 b1 a1 b1^-1 a1^-1").unwrap());
        let mut total = vec![0i64; s.rank()];
        for l in s.all_puncture_loops() {
            for (t, c) in total.iter_mut().zip(l.abelianize(s.rank())) {
                *t += c;
            }
        }
        assert!(total.iter().all(|&c| c == 0));
    }

    #[test]
    fn names_roundtrip() {
        let s = Signature::new(2, 2).unwrap();
        for i in 0..s.rank() as u32 {
            assert_eq!(s.parse_gen(&s.gen_name(i)), Some(i));
        }
        assert_eq!(s.parse_gen("a3"), None);
        assert_eq!(s.parse_gen("u4"), None); // u4 is the derived loop, not a generator
    }

    #[test]
    fn catalog_consistency() {
        for (g, n) in [(0u32, 2u32), (1, 1), (2, 2), (3, 1)] {
            let s = Signature::new(g, n).unwrap();
            let cat = catalog(&s);
            for c in cat.iter() {
                assert!(c.word.is_cyclically_reduced(), "{} not cyclically reduced", c.name);
                assert_eq!(
                    c.homology,
                    c.word.abelianize(s.rank()),
                    "homology mismatch for {}",
                    c.name
                );
            }
        }
    }

    #[test]
    fn catalog_homology_examples() {
        // beta_1 at g=1,n=1 has pure b1 homology; dT_1 is nullhomologous
        let s = Signature::new(1, 1).unwrap();
        let cat = catalog(&s);
        assert_eq!(cat.get("beta_1").unwrap().homology, vec![0, 1, 0]);
        assert_eq!(cat.get("dT_1").unwrap().homology, vec![0, 0, 0]);
        assert_eq!(cat.get("alpha_1").unwrap().homology, vec![1, 0, 0]);
        // spin curve of s_11 encircles exactly P_11 and P_12
        let s02 = Signature::new(0, 2).unwrap();
        let cat02 = catalog(&s02);
        assert_eq!(cat02.get("spin_1_1").unwrap().homology, vec![1, 1, 0]);
    }

    #[test]
    fn disjoint_curves_have_zero_pairing() {
        let s = Signature::new(2, 2).unwrap();
        let cat = catalog(&s);
        let pairs = [
            ("beta_1", "beta_2"),
            ("beta_1", "dT_2"),
            ("alpha_1", "beta_2"),
            ("dT_1", "dT_2"),
            ("pair_1", "pair_2"),
            ("beta_1", "pair_1"),
        ];
        for (x, y) in pairs {
            let cx = cat.get(x).unwrap();
            let cy = cat.get(y).unwrap();
            assert_eq!(
                s.intersection_pairing(&cx.homology, &cy.homology),
                0,
                "{} vs {}",
                x,
                y
            );
        }
        // alpha_1 and beta_1 meet once
        let ca = cat.get("alpha_1").unwrap();
        let cb = cat.get("beta_1").unwrap();
        assert_eq!(s.intersection_pairing(&ca.homology, &cb.homology).abs(), 1);
    }
}
