//! Freely reduced words over an indexed alphabet.
//!
//! A [`Word`] is the unique freely reduced form of a string over generators
//! `x_0, x_1, ...` and their inverses. Words are immutable values; equality
//! is sequence equality of reduced forms. The alphabet itself lives in
//! `surface::Signature`; everything here is index-based.

use serde::{Deserialize, Serialize};

/// One signed letter: generator `base` (when positive) or its inverse.
///
/// Encoded as a nonzero `i32`: `+(base+1)` or `-(base+1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter(i32);

impl Letter {
    pub fn new(base: u32, positive: bool) -> Self {
        let v = (base as i32) + 1;
        Letter(if positive { v } else { -v })
    }

    pub fn base(self) -> u32 {
        (self.0.unsigned_abs()) - 1
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// +1 or -1.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }
}

impl std::fmt::Debug for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.base())
        } else {
            write!(f, "x{}^-1", self.base())
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// The single-letter word `x_base`.
    pub fn gen(base: u32) -> Self {
        Word { letters: vec![Letter::new(base, true)] }
    }

    pub fn gen_inv(base: u32) -> Self {
        Word { letters: vec![Letter::new(base, false)] }
    }

    /// Free reduction of an arbitrary letter sequence. Idempotent.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push_reduced(l);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_base(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.base()).max()
    }

    /// Push one letter, cancelling against the current tail.
    pub fn push_reduced(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last == l.inverse() => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    /// Append a reduced word, cancelling at the seam.
    pub fn extend_reduced(&mut self, other: &Word) {
        for &l in &other.letters {
            self.push_reduced(l);
        }
    }

    /// `self · other`, reduced.
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.letters.reserve(other.len());
        w.extend_reduced(other);
        w
    }

    /// `self^{-1}`.
    pub fn invert(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `t · self · t^{-1}`.
    pub fn conjugate(&self, t: &Word) -> Word {
        let mut w = t.clone();
        w.extend_reduced(self);
        w.extend_reduced(&t.invert());
        w
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k >= 0 { self.clone() } else { self.invert() };
        let mut w = Word::empty();
        for _ in 0..k.unsigned_abs() {
            w.extend_reduced(&base);
        }
        w
    }

    /// Exponent sums per generator, length `rank`.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.letters {
            let b = l.base() as usize;
            assert!(b < rank, "letter index {} out of rank {}", b, rank);
            v[b] += l.sign() as i64;
        }
        v
    }

    /// Split `self = whisker · core · whisker^{-1}` with `core` cyclically reduced.
    ///
    /// Returns `(core, whisker)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let core = Word { letters: self.letters[lo..hi].to_vec() };
        let whisker = Word { letters: self.letters[..lo].to_vec() };
        (core, whisker)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => a != b.inverse(),
            _ => true,
        }
    }

    /// Rotation of a cyclically reduced word by `k`: `w[k..] · w[..k]`.
    pub fn rotation(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::empty();
        }
        let k = k % self.letters.len();
        let mut v = Vec::with_capacity(self.letters.len());
        v.extend_from_slice(&self.letters[k..]);
        v.extend_from_slice(&self.letters[..k]);
        Word { letters: v }
    }

    /// Lexicographically minimal rotation of the cyclic core.
    ///
    /// Two words are conjugate iff their cyclic normal forms are equal.
    pub fn cyclic_normal(&self) -> Word {
        let (core, _) = self.cyclic_reduce();
        if core.is_empty() {
            return core;
        }
        let mut best = core.clone();
        for k in 1..core.len() {
            let r = core.rotation(k);
            if r.letters < best.letters {
                best = r;
            }
        }
        best
    }

    /// Primitive root of a cyclically reduced word: smallest `r` with
    /// `self = r^m`. Returns `(r, m)`. The empty word yields `(ε, 0)`.
    pub fn primitive_root(&self) -> (Word, usize) {
        let n = self.letters.len();
        if n == 0 {
            return (Word::empty(), 0);
        }
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let r = &self.letters[..d];
            if (0..n).all(|i| self.letters[i] == r[i % d]) {
                return (Word { letters: r.to_vec() }, n / d);
            }
        }
        unreachable!()
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}", l)?;
        }
        Ok(())
    }
}

/// A conjugator `t` with `t · u · t^{-1} = v`, if the two words are conjugate.
///
/// The witness is verified by direct substitution before returning.
pub fn conjugacy_witness(u: &Word, v: &Word) -> Option<Word> {
    conjugators(u, v).map(|(t, _)| t)
}

/// All conjugators of `u` onto `v`, parameterized: the full solution set is
/// `{ t0 · z^k : k ∈ ℤ }` where `z` generates the centralizer of `u`.
///
/// Returns `(t0, z)`. For `u = ε` the centralizer is the whole group; the
/// returned `z` is `ε` and callers must special-case (only `v = ε` matches).
pub fn conjugators(u: &Word, v: &Word) -> Option<(Word, Word)> {
    let (cu, p) = u.cyclic_reduce();
    let (cv, q) = v.cyclic_reduce();
    if cu.len() != cv.len() {
        return None;
    }
    if cu.is_empty() {
        return Some((Word::empty(), Word::empty()));
    }
    for k in 0..cu.len() {
        if cu.rotation(k) == cv {
            // rot_k(cu) = s^{-1} · cu · s with s the length-k prefix of cu.
            let s = Word { letters: cu.letters[..k].to_vec() };
            let mut t = q.clone();
            t.extend_reduced(&s.invert());
            t.extend_reduced(&p.invert());
            debug_assert_eq!(&u.conjugate(&t), v);
            if &u.conjugate(&t) != v {
                continue;
            }
            let (root, _) = cu.primitive_root();
            let z = root.conjugate(&p);
            debug_assert_eq!(u.conjugate(&z), *u);
            return Some((t, z));
        }
    }
    None
}

/// Parse the word-literal grammar: whitespace-separated identifiers with an
/// optional `^<exp>` suffix, e.g. `a1 b1^-1 u3^2`. `resolve` maps an
/// identifier to a generator index.
pub fn parse_word<F>(text: &str, mut resolve: F) -> Result<Word, String>
where
    F: FnMut(&str) -> Option<u32>,
{
    let mut w = Word::empty();
    for tok in text.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| format!("bad exponent `{}` in token `{}`", e, tok))?;
                (n, exp)
            }
            None => (tok, 1),
        };
        let base = resolve(name).ok_or_else(|| format!("unknown generator `{}`", name))?;
        w.extend_reduced(&Word::gen(base).pow(exp));
    }
    Ok(w)
}

/// Render a word in the same grammar, folding runs of one generator into
/// `^k` exponents.
pub fn display_word<F>(w: &Word, mut name: F) -> String
where
    F: FnMut(u32) -> String,
{
    if w.is_empty() {
        return String::new();
    }
    let mut out = String::new();
    let ls = w.letters();
    let mut i = 0;
    while i < ls.len() {
        let mut j = i + 1;
        while j < ls.len() && ls[j] == ls[i] {
            j += 1;
        }
        let run = (j - i) as i64;
        let exp = if ls[i].is_positive() { run } else { -run };
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&name(ls[i].base()));
        if exp != 1 {
            out.push_str(&format!("^{}", exp));
        }
        i = j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        // test shorthand: letters a..z are generators 0..25, uppercase inverse
        Word::reduce(s.chars().filter(|c| c.is_ascii_alphabetic()).map(|c| {
            if c.is_ascii_lowercase() {
                Letter::new(c as u32 - 'a' as u32, true)
            } else {
                Letter::new(c as u32 - 'A' as u32, false)
            }
        }))
    }

    /// One-letter-at-a-time stack oracle for free reduction.
    fn stack_reduce_oracle(letters: &[Letter]) -> Vec<Letter> {
        let mut st: Vec<Letter> = Vec::new();
        for &l in letters {
            if st.last() == Some(&l.inverse()) {
                st.pop();
            } else {
                st.push(l);
            }
        }
        st
    }

    #[test]
    fn reduce_examples() {
        assert!(w("aA").is_empty());
        assert_eq!(w("abBa"), w("aa"));
        assert_eq!(w("aa").len(), 2);
    }

    #[test]
    fn concat_invert_conjugate_examples() {
        assert!(w("a").concat(&w("A")).is_empty());
        assert_eq!(w("ab").invert(), w("BA"));
        assert_eq!(w("b").conjugate(&w("a")), w("abA"));
        assert_eq!(w("b").conjugate(&Word::empty()), w("b"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, wh) = w("abA").cyclic_reduce();
        assert_eq!(core, w("b"));
        assert_eq!(wh, w("a"));
        let (core, wh) = Word::empty().cyclic_reduce();
        assert!(core.is_empty() && wh.is_empty());
    }

    #[test]
    fn conjugacy_examples() {
        // t = a^{-1} conjugates ab to ba.
        let t = conjugacy_witness(&w("ab"), &w("ba")).unwrap();
        assert_eq!(w("ab").conjugate(&t), w("ba"));
        assert!(conjugacy_witness(&w("a"), &w("b")).is_none());
        assert!(conjugacy_witness(&w("a"), &w("A")).is_none());
    }

    #[test]
    fn primitive_root_examples() {
        let (r, m) = w("abab").primitive_root();
        assert_eq!((r, m), (w("ab"), 2));
        let (r, m) = w("ab").primitive_root();
        assert_eq!((r, m), (w("ab"), 1));
    }

    /// Every word conjugate to `u` by a conjugator of length ≤ `radius`,
    /// found by breadth-first conjugation by single letters. Brute-force
    /// oracle for the conjugacy decision.
    fn conjugate_ball(u: &Word, rank: u32, radius: usize) -> std::collections::HashSet<Word> {
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![u.clone()];
        seen.insert(u.clone());
        for _ in 0..radius {
            let mut next = Vec::new();
            for v in frontier {
                for b in 0..rank {
                    for pos in [true, false] {
                        let t = Word {
                            letters: vec![Letter::new(b, pos)],
                        };
                        let c = v.conjugate(&t);
                        if seen.insert(c.clone()) {
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        seen
    }

    #[test]
    fn conjugacy_vs_brute_force_small() {
        // all reduced words of length ≤ 4 over rank 2
        let mut words = vec![Word::empty()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for u in &words {
                for b in 0..2 {
                    for pos in [true, false] {
                        let v = u.concat(&Word {
                            letters: vec![Letter::new(b, pos)],
                        });
                        if v.len() == u.len() + 1 {
                            next.push(v);
                        }
                    }
                }
            }
            words.extend(next.clone());
            words.sort();
            words.dedup();
        }
        // group by cyclic normal form, then spot-check against the ball oracle
        for u in words.iter().filter(|u| u.len() <= 3) {
            let ball = conjugate_ball(u, 2, 8);
            for v in words.iter().filter(|v| v.len() <= 3) {
                let mine = conjugacy_witness(u, v).is_some();
                let brute = ball.contains(v);
                assert_eq!(mine, brute, "conjugacy mismatch for {:?} vs {:?}", u, v);
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        let resolve = |s: &str| match s {
            "a1" => Some(0u32),
            "b1" => Some(1),
            "u3" => Some(2),
            _ => None,
        };
        let name = |i: u32| ["a1", "b1", "u3"][i as usize].to_string();
        let w = parse_word("a1 b1^-1 u3^2", resolve).unwrap();
        assert_eq!(display_word(&w, name), "a1 b1^-1 u3^2");
        assert!(parse_word("zz", resolve).is_err());
        assert!(parse_word("a1^x", resolve).is_err());
        assert!(parse_word("", resolve).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn reduce_matches_stack_oracle(raw in proptest::collection::vec((0u32..3, any::<bool>()), 0..50)) {
            let letters: Vec<Letter> = raw.iter().map(|&(b, p)| Letter::new(b, p)).collect();
            let reduced = Word::reduce(letters.clone());
            prop_assert_eq!(reduced.letters(), &stack_reduce_oracle(&letters)[..]);
            // idempotent
            prop_assert_eq!(Word::reduce(reduced.letters().to_vec()), reduced);
        }

        #[test]
        fn cyclic_reduce_reassembles(raw in proptest::collection::vec((0u32..3, any::<bool>()), 0..40)) {
            let u = Word::reduce(raw.iter().map(|&(b, p)| Letter::new(b, p)));
            let (core, wh) = u.cyclic_reduce();
            prop_assert!(core.is_cyclically_reduced());
            prop_assert_eq!(core.conjugate(&wh), u);
        }

        #[test]
        fn concat_associative(
            ra in proptest::collection::vec((0u32..3, any::<bool>()), 0..20),
            rb in proptest::collection::vec((0u32..3, any::<bool>()), 0..20),
            rc in proptest::collection::vec((0u32..3, any::<bool>()), 0..20),
        ) {
            let a = Word::reduce(ra.iter().map(|&(b, p)| Letter::new(b, p)));
            let b = Word::reduce(rb.iter().map(|&(b, p)| Letter::new(b, p)));
            let c = Word::reduce(rc.iter().map(|&(b, p)| Letter::new(b, p)));
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            prop_assert_eq!(a.invert().invert(), a.clone());
            // conjugate(conjugate(u, s), t) = conjugate(u, t·s)
            prop_assert_eq!(a.conjugate(&b).conjugate(&c), a.conjugate(&c.concat(&b)));
        }

        #[test]
        fn conjugacy_witness_verifies(
            ra in proptest::collection::vec((0u32..3, any::<bool>()), 0..15),
            rt in proptest::collection::vec((0u32..3, any::<bool>()), 0..10),
        ) {
            let u = Word::reduce(ra.iter().map(|&(b, p)| Letter::new(b, p)));
            let t = Word::reduce(rt.iter().map(|&(b, p)| Letter::new(b, p)));
            let v = u.conjugate(&t);
            let got = conjugacy_witness(&u, &v).expect("conjugates must be detected");
            prop_assert_eq!(u.conjugate(&got), v);
        }
    }
}
