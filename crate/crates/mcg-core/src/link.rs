//! Link presentations from gluing classes.
//!
//! A gluing class `phi` presents a link complement by van Kampen along the
//! splitting surface: one relator per surface generator, identifying its
//! image in the lower handlebody group with the image of `phi(w)` in the
//! upper one. Generators are the handle cores `x_l` / `xb_l` and the arc
//! meridians `m_k` / `mb_k`.

use crate::autrep::Automorphism;
use crate::laurent::{lgcd, lpoly_det, LPoly};
use crate::linalg::{abelian_invariants, IntMat};
use crate::surface::Signature;
use crate::word::{Letter, Word};
use num_bigint::BigInt;

/// Which side of the splitting surface a word is pushed into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Orientation convention for the arc meridian pair: which endpoint loop
/// maps to the positive meridian. Both choices are consistent; `Forward`
/// is the default selected by the invariance experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArcOrientation {
    #[default]
    Forward,
    Reversed,
}

/// Presentation of the complement of the glued link.
#[derive(Debug, Clone)]
pub struct LinkPresentation {
    pub genus: u32,
    pub arcs: u32,
    pub relators: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkError {
    NotAMappingClass,
    InconsistentOrientation,
}

impl std::fmt::Display for LinkError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinkError::NotAMappingClass => write!(f, "gluing word is not a mapping class"),
            LinkError::InconsistentOrientation => {
                write!(f, "meridian components cannot be consistently oriented")
            }
        }
    }
}

impl std::error::Error for LinkError {}

impl LinkPresentation {
    /// Number of presentation generators: `x`, `m`, `xb`, `mb`.
    pub fn gen_count(&self) -> usize {
        (2 * self.genus + 2 * self.arcs) as usize
    }

    pub fn gen_name(&self, idx: usize) -> String {
        let g = self.genus as usize;
        let n = self.arcs as usize;
        if idx < g {
            format!("x{}", idx + 1)
        } else if idx < g + n {
            format!("m{}", idx - g + 1)
        } else if idx < 2 * g + n {
            format!("xb{}", idx - g - n + 1)
        } else {
            format!("mb{}", idx - 2 * g - n + 1)
        }
    }

    fn x(&self, l: u32) -> u32 {
        l - 1
    }

    fn m(&self, k: u32) -> u32 {
        self.genus + k - 1
    }

    fn xb(&self, l: u32) -> u32 {
        self.genus + self.arcs + l - 1
    }

    fn mb(&self, k: u32) -> u32 {
        2 * self.genus + self.arcs + k - 1
    }

    /// Exponent-sum matrix: rows are relators, columns generators.
    pub fn relator_matrix(&self) -> IntMat {
        let cols = self.gen_count();
        IntMat::from_fn(self.relators.len(), cols, |i, j| {
            BigInt::from(self.relators[i].abelianize(cols)[j])
        })
    }

    /// First homology of the link complement: free rank and torsion.
    pub fn abelianization(&self) -> (usize, Vec<BigInt>) {
        abelian_invariants(&self.relator_matrix())
    }

    /// First homology of the ambient closed manifold: kill all meridians.
    pub fn ambient_abelianization(&self) -> (usize, Vec<BigInt>) {
        let cols = self.gen_count();
        let g = self.genus as usize;
        let n = self.arcs as usize;
        let extra = 2 * n;
        let mut m = IntMat::zeros(self.relators.len() + extra, cols);
        for (i, r) in self.relators.iter().enumerate() {
            for (j, c) in r.abelianize(cols).into_iter().enumerate() {
                m[(i, j)] = BigInt::from(c);
            }
        }
        for k in 0..n {
            m[(self.relators.len() + k, g + k)] = BigInt::from(1);
            m[(self.relators.len() + n + k, 2 * g + n + k)] = BigInt::from(1);
        }
        abelian_invariants(&m)
    }

    pub fn to_text(&self) -> String {
        let gens: Vec<String> = (0..self.gen_count()).map(|i| self.gen_name(i)).collect();
        let mut out = format!("gens: {}\nrels:\n", gens.join(" "));
        for r in &self.relators {
            out.push_str(&format!("  {}\n", self.render(r)));
        }
        out
    }

    /// One relator per line, `*` concatenation and `^` exponents.
    pub fn to_exchange(&self) -> String {
        let mut out = String::new();
        for r in &self.relators {
            let mut parts = Vec::new();
            let ls = r.letters();
            let mut i = 0;
            while i < ls.len() {
                let mut j = i + 1;
                while j < ls.len() && ls[j] == ls[i] {
                    j += 1;
                }
                let run = (j - i) as i64;
                let e = if ls[i].is_positive() { run } else { -run };
                let name = self.gen_name(ls[i].base() as usize);
                parts.push(if e == 1 { name } else { format!("{}^{}", name, e) });
                i = j;
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            out.push_str(&parts.join("*"));
            out.push('\n');
        }
        out
    }

    fn render(&self, w: &Word) -> String {
        crate::word::display_word(w, |i| self.gen_name(i as usize))
    }
}

/// Image of a surface word under the inclusion into one handlebody:
/// meridian letters `b_l` die, `a_l` maps to the core `x_l`, puncture
/// loops map to signed arc meridians.
pub fn quotient_to_handlebody(
    sig: &Signature,
    w: &Word,
    side: Side,
    orient: ArcOrientation,
) -> Word {
    let pres = LinkPresentation { genus: sig.genus(), arcs: sig.arcs(), relators: vec![] };
    let mut out = Word::empty();
    for &l in w.letters() {
        let idx = l.base();
        let g2 = 2 * sig.genus();
        let img: Option<(u32, bool)> = if idx < g2 {
            if idx % 2 == 0 {
                let hl = idx / 2 + 1;
                let t = match side {
                    Side::Lower => pres.x(hl),
                    Side::Upper => pres.xb(hl),
                };
                Some((t, true))
            } else {
                None // meridians bound discs
            }
        } else {
            let j = idx - g2 + 1; // puncture index 1..2n-1
            let k = (j + 1) / 2;
            let first = j % 2 == 1;
            let positive = match orient {
                ArcOrientation::Forward => first,
                ArcOrientation::Reversed => !first,
            };
            let t = match side {
                Side::Lower => pres.m(k),
                Side::Upper => pres.mb(k),
            };
            Some((t, positive))
        };
        if let Some((t, positive)) = img {
            let pos = positive == l.is_positive();
            out.push_reduced(Letter::new(t, pos));
        }
    }
    out
}

/// Van Kampen presentation of the complement of the link glued by `phi`.
pub fn link_presentation(
    sig: &Signature,
    phi: &Automorphism,
    orient: ArcOrientation,
) -> Result<LinkPresentation, LinkError> {
    if !phi.is_mapping_class() {
        return Err(LinkError::NotAMappingClass);
    }
    let mut relators = Vec::new();
    for i in 0..sig.rank() as u32 {
        let w = Word::gen(i);
        let lower = quotient_to_handlebody(sig, &w, Side::Lower, orient);
        let upper = quotient_to_handlebody(sig, &phi.apply(&w), Side::Upper, orient);
        relators.push(lower.concat(&upper.invert()));
    }
    Ok(LinkPresentation { genus: sig.genus(), arcs: sig.arcs(), relators })
}

/// Component and orientation data of the glued link.
#[derive(Debug, Clone)]
pub struct LinkComponents {
    pub count: usize,
    /// component index and traversal sign of each lower arc (1-based k).
    pub lower: Vec<(usize, i8)>,
    /// component index and traversal sign of each upper arc.
    pub upper: Vec<(usize, i8)>,
}

/// Walk the endpoint pairing to orient every arc and group them into link
/// components. The lower arc `k` joins punctures `2k-1, 2k`; the upper arc
/// `k` joins the `sigma`-preimages of `2k-1, 2k`.
pub fn link_components(sig: &Signature, phi: &Automorphism) -> Result<LinkComponents, LinkError> {
    let n = sig.arcs() as usize;
    let perm = phi.induced_permutation().ok_or(LinkError::NotAMappingClass)?;
    let mut inv = vec![0usize; 2 * n];
    for i in 0..2 * n {
        inv[perm.image(i)] = i;
    }
    let mut lower = vec![(usize::MAX, 0i8); n];
    let mut upper = vec![(usize::MAX, 0i8); n];
    let mut comp = 0usize;
    let mut visited = vec![false; 2 * n];
    for start in 0..2 * n {
        if visited[start] {
            continue;
        }
        // traverse the alternating cycle lower-arc, upper-arc, ...
        let mut p = start;
        loop {
            visited[p] = true;
            // lower arc containing p
            let k = p / 2;
            let sign = if p % 2 == 0 { 1i8 } else { -1 };
            if lower[k].1 != 0 {
                if lower[k] != (comp, sign) {
                    return Err(LinkError::InconsistentOrientation);
                }
            } else {
                lower[k] = (comp, sign);
            }
            let q = if p % 2 == 0 { p + 1 } else { p - 1 };
            visited[q] = true;
            // upper arc containing q: pair {inv(2t-1), inv(2t)} with sigma(q) = 2t-1 or 2t
            let t = perm.image(q) / 2;
            let sign_u = if perm.image(q) % 2 == 0 { 1i8 } else { -1 };
            if upper[t].1 != 0 {
                if upper[t] != (comp, sign_u) {
                    return Err(LinkError::InconsistentOrientation);
                }
            } else {
                upper[t] = (comp, sign_u);
            }
            let other_u = if perm.image(q) % 2 == 0 { perm.image(q) + 1 } else { perm.image(q) - 1 };
            p = inv[other_u];
            if p == start {
                break;
            }
        }
        comp += 1;
    }
    Ok(LinkComponents { count: comp, lower, upper })
}

/// Fox-derivative matrix of the presentation, evaluated under the map
/// sending each arc meridian to its component variable.
pub struct AlexanderData {
    pub components: usize,
    pub matrix: Vec<Vec<LPoly>>,
}

pub fn alexander_matrix(
    sig: &Signature,
    pres: &LinkPresentation,
    comps: &LinkComponents,
) -> AlexanderData {
    let vars = comps.count;
    let g = sig.genus() as usize;
    let n = sig.arcs() as usize;
    let eval = |idx: usize| -> LPoly {
        if idx < g {
            LPoly::one(vars)
        } else if idx < g + n {
            let (c, s) = comps.lower[idx - g];
            LPoly::monomial(vars, c, s as i64)
        } else if idx < 2 * g + n {
            LPoly::one(vars)
        } else {
            let (c, s) = comps.upper[idx - 2 * g - n];
            LPoly::monomial(vars, c, s as i64)
        }
    };
    let gen_count = pres.gen_count();
    let mut matrix = Vec::new();
    for r in &pres.relators {
        let mut row = vec![LPoly::zero(vars); gen_count];
        let mut prefix = LPoly::one(vars);
        for &l in r.letters() {
            let b = l.base() as usize;
            if l.is_positive() {
                row[b] = row[b].add(&prefix);
                prefix = prefix.mul(&eval(b));
            } else {
                // d(x^-1) = -x^-1: the prefix picks up the inverse letter
                // first, then contributes negatively
                prefix = prefix.mul(&invert_monomial(&eval(b)));
                row[b] = row[b].sub(&prefix);
            }
        }
        matrix.push(row);
    }
    AlexanderData { components: vars, matrix }
}

/// The evaluation map is monomial-valued, so inverses just negate exponents.
fn invert_monomial(m: &LPoly) -> LPoly {
    let vars = m.vars();
    let mut out = LPoly::zero(vars);
    for (e, c) in m.terms_iter() {
        let neg: Vec<i64> = e.iter().map(|x| -x).collect();
        out = out.add(&LPoly::from_term(vars, neg, c.clone()));
    }
    out
}

/// Gcds of all k-by-k minors for k in 1..=limit, unit-normalized. The full
/// vector is the elementary-ideal fingerprint used by the invariance
/// experiments.
pub fn minor_gcds(data: &AlexanderData, limit: usize) -> Vec<LPoly> {
    let rows = data.matrix.len();
    let cols = if rows == 0 { 0 } else { data.matrix[0].len() };
    let kmax = rows.min(cols).min(limit);
    let mut out = Vec::new();
    for k in 1..=kmax {
        let rsel = combinations(rows, k);
        let csel = combinations(cols, k);
        let mut gcd = LPoly::zero(data.components);
        'outer: for rs in &rsel {
            for cs in &csel {
                let sub: Vec<Vec<LPoly>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| data.matrix[i][j].clone()).collect())
                    .collect();
                let d = lpoly_det(&sub);
                gcd = lgcd(&gcd, &d);
                if gcd.is_one() {
                    break 'outer;
                }
            }
        }
        out.push(gcd);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if n - start < k - cur.len() {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
