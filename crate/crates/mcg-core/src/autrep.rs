//! Free-group automorphisms acting on the surface model.
//!
//! An [`Automorphism`] stores the images of the free generators, optionally
//! the images under its inverse, and the move word (named basic moves with
//! exponents) that produced it. Equality of mapping classes is decided at
//! the outer level: two automorphisms agree up to one common inner
//! conjugation.

use crate::linalg::IntMat;
use crate::surface::Signature;
use crate::word::{conjugators, Word};
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutError {
    SigMismatch,
    RankExceeded { base: u32, rank: usize },
    NotInvertible,
    NotMappingClass,
}

impl std::fmt::Display for AutError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AutError::SigMismatch => write!(f, "signature mismatch"),
            AutError::RankExceeded { base, rank } => {
                write!(f, "generator x{} outside alphabet of rank {}", base, rank)
            }
            AutError::NotInvertible => write!(f, "no move word: cannot invert a raw endomorphism"),
            AutError::NotMappingClass => write!(f, "not a mapping class"),
        }
    }
}

impl std::error::Error for AutError {}

/// A permutation of the 2n puncture labels (stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuncturePermutation(Vec<usize>);

impl PuncturePermutation {
    pub fn identity(n: usize) -> Self {
        PuncturePermutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(PuncturePermutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 0-based image of a 0-based point.
    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other` (other acts first).
    pub fn compose(&self, other: &PuncturePermutation) -> PuncturePermutation {
        assert_eq!(self.degree(), other.degree());
        PuncturePermutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    /// Cycle notation on 1-based labels, e.g. `(1 2)(3 4)`.
    pub fn cycles(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.0[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.0[cur];
            }
            out.push('(');
            out.push_str(
                &cyc.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

/// Integer matrix of the induced action on first homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyAction {
    pub mat: IntMat,
}

impl HomologyAction {
    pub fn det(&self) -> BigInt {
        self.mat.det()
    }

    /// The closed-surface block preserves the symplectic form after
    /// quotienting the puncture classes.
    pub fn preserves_symplectic_quotient(&self, sig: &Signature) -> bool {
        let g2 = 2 * sig.genus() as usize;
        let block = self.mat.submatrix(&(0..g2).collect::<Vec<_>>(), &(0..g2).collect::<Vec<_>>());
        let mut j = IntMat::zeros(g2, g2);
        for l in 0..sig.genus() as usize {
            j[(2 * l, 2 * l + 1)] = BigInt::one();
            j[(2 * l + 1, 2 * l)] = -BigInt::one();
        }
        let bt = IntMat::from_fn(g2, g2, |r, c| block[(c, r)].clone());
        bt.mul(&j).mul(&block) == j
    }
}

/// A free-group automorphism (or raw endomorphism) over a signature.
#[derive(Debug, Clone)]
pub struct Automorphism {
    sig: Signature,
    images: Vec<Word>,
    inv_images: Option<Vec<Word>>,
    move_word: Option<Vec<(String, i64)>>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.images == other.images
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    pub fn identity(sig: &Signature) -> Self {
        let images = (0..sig.rank() as u32).map(Word::gen).collect::<Vec<_>>();
        Automorphism {
            sig: *sig,
            images: images.clone(),
            inv_images: Some(images),
            move_word: Some(Vec::new()),
        }
    }

    /// A basic move: images plus analytically known inverse images.
    pub fn basic(
        sig: &Signature,
        images: Vec<Word>,
        inv_images: Vec<Word>,
        name: &str,
        exp: i64,
    ) -> Self {
        debug_assert_eq!(images.len(), sig.rank());
        debug_assert_eq!(inv_images.len(), sig.rank());
        let a = Automorphism {
            sig: *sig,
            images,
            inv_images: Some(inv_images),
            move_word: Some(vec![(name.to_string(), exp)]),
        };
        debug_assert!(a.check_inverse(), "inverse images wrong for basic move {}", name);
        a
    }

    /// A raw endomorphism given by generator images only. Accepted for
    /// analysis but not for inversion.
    pub fn raw(sig: &Signature, images: Vec<Word>) -> Self {
        assert_eq!(images.len(), sig.rank());
        Automorphism { sig: *sig, images, inv_images: None, move_word: None }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn move_word(&self) -> Option<&[(String, i64)]> {
        self.move_word.as_deref()
    }

    pub fn is_invertible(&self) -> bool {
        self.inv_images.is_some()
    }

    fn check_inverse(&self) -> bool {
        match &self.inv_images {
            None => false,
            Some(inv) => {
                let back = Automorphism { sig: self.sig, images: inv.clone(), inv_images: None, move_word: None };
                (0..self.sig.rank() as u32)
                    .all(|i| back.apply(&self.apply(&Word::gen(i))) == Word::gen(i))
                    && (0..self.sig.rank() as u32)
                        .all(|i| self.apply(&back.apply(&Word::gen(i))) == Word::gen(i))
            }
        }
    }

    /// Homomorphic extension of the generator images, freely reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let rank = self.sig.rank();
        let mut out = Word::empty();
        for &l in w.letters() {
            let b = l.base() as usize;
            assert!(b < rank, "alphabet mismatch: x{} outside rank {}", b, rank);
            if l.is_positive() {
                out.extend_reduced(&self.images[b]);
            } else {
                out.extend_reduced(&self.images[b].invert());
            }
        }
        out
    }

    pub fn checked_apply(&self, w: &Word) -> Result<Word, AutError> {
        if let Some(b) = w.max_base() {
            if b as usize >= self.sig.rank() {
                return Err(AutError::RankExceeded { base: b, rank: self.sig.rank() });
            }
        }
        Ok(self.apply(w))
    }

    fn inverse_map(&self) -> Option<Automorphism> {
        self.inv_images.as_ref().map(|inv| Automorphism {
            sig: self.sig,
            images: inv.clone(),
            inv_images: Some(self.images.clone()),
            move_word: None,
        })
    }

    /// `self ∘ other` (other acts first). Move words concatenate.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert_eq!(self.sig, other.sig, "signature mismatch in compose");
        let images: Vec<Word> = other.images.iter().map(|w| self.apply(w)).collect();
        let inv_images = match (&self.inv_images, &other.inv_images) {
            (Some(_), Some(_)) => {
                let other_inv = other.inverse_map().unwrap();
                let self_inv = self.inv_images.as_ref().unwrap();
                Some(self_inv.iter().map(|w| other_inv.apply(w)).collect())
            }
            _ => None,
        };
        let move_word = match (&self.move_word, &other.move_word) {
            (Some(a), Some(b)) => {
                let mut m = a.clone();
                m.extend(b.iter().cloned());
                Some(m)
            }
            _ => None,
        };
        Automorphism { sig: self.sig, images, inv_images, move_word }
    }

    /// Inverse via the recorded basic moves (anti-homomorphic reversal).
    pub fn invert(&self) -> Result<Automorphism, AutError> {
        let inv = self.inv_images.clone().ok_or(AutError::NotInvertible)?;
        let move_word = self
            .move_word
            .as_ref()
            .map(|m| m.iter().rev().map(|(n, e)| (n.clone(), -e)).collect());
        Ok(Automorphism {
            sig: self.sig,
            images: inv,
            inv_images: Some(self.images.clone()),
            move_word,
        })
    }

    pub fn pow(&self, k: i64) -> Result<Automorphism, AutError> {
        let base = if k >= 0 { self.clone() } else { self.invert()? };
        let mut acc = Automorphism::identity(&self.sig);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w == &Word::gen(i as u32))
    }

    /// The permutation induced on the 2n punctures: `σ` with `φ(u_j)`
    /// conjugate to `u_{σ(j)}` with positive exponent. `None` when some
    /// image is not a positive conjugate of a puncture loop or the
    /// assignment is not a bijection.
    pub fn induced_permutation(&self) -> Option<PuncturePermutation> {
        let loops = self.sig.all_puncture_loops();
        let normals: Vec<Word> = loops.iter().map(|w| w.cyclic_normal()).collect();
        let mut images = Vec::with_capacity(loops.len());
        for lp in &loops {
            let img = self.apply(lp).cyclic_normal();
            let t = normals.iter().position(|n| n == &img)?;
            images.push(t);
        }
        PuncturePermutation::from_images(images)
    }

    /// Orientation-preserving mapping-class test: every puncture loop maps
    /// to a positive conjugate of a puncture loop (bijectively), which also
    /// forces the surface relator to be preserved up to conjugacy.
    pub fn is_mapping_class(&self) -> bool {
        self.induced_permutation().is_some()
    }

    /// Abelianization of the generator images, as a column-action matrix.
    pub fn homology_action(&self) -> HomologyAction {
        let rank = self.sig.rank();
        let mut mat = IntMat::zeros(rank, rank);
        for (j, w) in self.images.iter().enumerate() {
            for (i, c) in w.abelianize(rank).into_iter().enumerate() {
                mat[(i, j)] = BigInt::from(c);
            }
        }
        HomologyAction { mat }
    }

    /// Conjugator `t` with `self = inn_t ∘ other`, i.e.
    /// `self(x) = t · other(x) · t^{-1}` for every generator, if one exists.
    ///
    /// Candidates are `t0 · z^k` where `t0` conjugates `other(x0)` to
    /// `self(x0)` and `z` generates the centralizer of `other(x0)`
    /// (centralizers in free groups are cyclic). The exponent range is
    /// bounded by the image lengths, which makes the `None` answer sound.
    pub fn outer_equal(&self, other: &Automorphism) -> Option<Word> {
        if self.sig != other.sig {
            return None;
        }
        if self.images == other.images {
            return Some(Word::empty());
        }
        // pick the pivot generator with the shortest nonempty image of other
        let x0 = (0..self.sig.rank())
            .filter(|&i| !other.images[i].is_empty())
            .min_by_key(|&i| other.images[i].cyclic_reduce().0.len().max(1))?;
        let (t0, z) = conjugators(&other.images[x0], &self.images[x0])?;
        let verify = |t: &Word| {
            (0..self.sig.rank()).all(|i| other.images[i].conjugate(t) == self.images[i])
        };
        if z.is_empty() {
            // other(x0) was trivial despite the filter; only exact equality remains
            return verify(&t0).then_some(t0);
        }
        let maxlen = self
            .images
            .iter()
            .chain(other.images.iter())
            .map(|w| w.len())
            .max()
            .unwrap_or(0);
        let zc = z.cyclic_reduce().0.len().max(1);
        let bound = ((2 * maxlen + t0.len()) / zc + 2) as i64;
        let mut pos = t0.clone();
        let mut neg = t0.clone();
        if verify(&t0) {
            return Some(t0);
        }
        let zinv = z.invert();
        for _ in 1..=bound {
            pos = pos.concat(&z);
            if verify(&pos) {
                return Some(pos);
            }
            neg = neg.concat(&zinv);
            if verify(&neg) {
                return Some(neg);
            }
        }
        None
    }
}

/// Invert a generator-image tuple by tracked Nielsen reduction.
///
/// Returns the inverse images when the tuple defines an automorphism.
/// Used to derive inverses of constructed moves and as an independent
/// bijectivity check.
pub fn nielsen_inverse(sig: &Signature, images: &[Word]) -> Option<Vec<Word>> {
    let rank = sig.rank();
    assert_eq!(images.len(), rank);
    // ws: current tuple; vs: each current word expressed in the original
    // images as abstract letters 0..rank-1.
    let mut ws: Vec<Word> = images.to_vec();
    let mut vs: Vec<Word> = (0..rank as u32).map(Word::gen).collect();
    let total = |ws: &[Word]| ws.iter().map(|w| w.len()).sum::<usize>();
    let mut budget = 10_000usize;
    loop {
        if budget == 0 {
            return None;
        }
        budget -= 1;
        let cur = total(&ws);
        // basis reached?
        if cur == rank {
            let mut used = vec![false; rank];
            let mut ok = true;
            for w in &ws {
                if w.len() != 1 {
                    ok = false;
                    break;
                }
                let b = w.letters()[0].base() as usize;
                if b >= rank || used[b] {
                    ok = false;
                    break;
                }
                used[b] = true;
            }
            if ok {
                let mut inv = vec![Word::empty(); rank];
                for (i, w) in ws.iter().enumerate() {
                    let l = w.letters()[0];
                    let e = if l.is_positive() { vs[i].clone() } else { vs[i].invert() };
                    inv[l.base() as usize] = e;
                }
                return Some(inv);
            }
        }
        // best strictly reducing Nielsen move: w_i <- w_i w_j^e or w_j^e w_i
        let mut best: Option<(usize, usize, i8, bool, usize)> = None;
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                for e in [1i8, -1] {
                    let wj = if e > 0 { ws[j].clone() } else { ws[j].invert() };
                    for right in [true, false] {
                        let cand = if right { ws[i].concat(&wj) } else { wj.concat(&ws[i]) };
                        let new_total = cur - ws[i].len() + cand.len();
                        if new_total < cur && best.map_or(true, |(.., b)| new_total < b) {
                            best = Some((i, j, e, right, new_total));
                        }
                    }
                }
            }
        }
        match best {
            Some((i, j, e, right, _)) => {
                let wj = if e > 0 { ws[j].clone() } else { ws[j].invert() };
                let vj = if e > 0 { vs[j].clone() } else { vs[j].invert() };
                if right {
                    ws[i] = ws[i].concat(&wj);
                    vs[i] = vs[i].concat(&vj);
                } else {
                    ws[i] = wj.concat(&ws[i]);
                    vs[i] = vj.concat(&vs[i]);
                }
            }
            None => {
                if cur == rank {
                    // single letters but repeated bases: not an automorphism
                    return None;
                }
                // plateau: try one length-preserving move that unlocks progress
                let mut applied = false;
                'outer: for i in 0..rank {
                    for j in 0..rank {
                        if i == j {
                            continue;
                        }
                        for e in [1i8, -1] {
                            let wj = if e > 0 { ws[j].clone() } else { ws[j].invert() };
                            for right in [true, false] {
                                let cand =
                                    if right { ws[i].concat(&wj) } else { wj.concat(&ws[i]) };
                                if cand.len() == ws[i].len() && cand != ws[i] {
                                    let vj = if e > 0 { vs[j].clone() } else { vs[j].invert() };
                                    if right {
                                        ws[i] = cand;
                                        vs[i] = vs[i].concat(&vj);
                                    } else {
                                        ws[i] = cand;
                                        vs[i] = vj.concat(&vs[i]);
                                    }
                                    applied = true;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                if !applied {
                    return None;
                }
            }
        }
    }
}
