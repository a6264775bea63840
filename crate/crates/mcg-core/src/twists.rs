//! Twist and move primitives of the planar model.
//!
//! Everything reduces to a handful of closed-form basic moves:
//!
//! * meridian and longitude twists of one handle,
//! * half twists of adjacent punctures (braid moves),
//! * block swaps of adjacent puncture pairs and of adjacent handles,
//! * twists along lower-corridor enclosing curves.
//!
//! A non-contiguous enclosing curve is the image of a contiguous "home"
//! configuration under explicit braid/handle transports, so its twist is a
//! conjugate of a home twist. The home formulas are pinned by the relation
//! suite; see the tests here and in `ext`.

use crate::autrep::{nielsen_inverse, Automorphism};
use crate::surface::{CurveKind, Obj, Signature};
use crate::word::Word;

/// Right-handed Dehn twist along the meridian `beta_l`: `a_l -> a_l b_l`.
pub fn meridian_twist(sig: &Signature, l: u32, h: i64) -> Automorphism {
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    let mut inv: Vec<Word> = (0..rank).map(Word::gen).collect();
    let ia = sig.a(l) as usize;
    let b = Word::gen(sig.b(l));
    images[ia] = Word::gen(sig.a(l)).concat(&b);
    inv[ia] = Word::gen(sig.a(l)).concat(&b.invert());
    let one = Automorphism::basic(sig, images, inv, &format!("twist:beta_{}", l), 1);
    one.pow(h).unwrap()
}

/// Right-handed Dehn twist along the longitude `alpha_l`: `b_l -> b_l a_l^{-1}`.
pub fn longitude_twist(sig: &Signature, l: u32, h: i64) -> Automorphism {
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    let mut inv: Vec<Word> = (0..rank).map(Word::gen).collect();
    let ib = sig.b(l) as usize;
    let a = Word::gen(sig.a(l));
    images[ib] = Word::gen(sig.b(l)).concat(&a.invert());
    inv[ib] = Word::gen(sig.b(l)).concat(&a);
    let one = Automorphism::basic(sig, images, inv, &format!("twist:alpha_{}", l), 1);
    one.pow(h).unwrap()
}

/// Positive half twist of the adjacent punctures `k, k+1` (`1 <= k <= 2n-1`):
/// `u_k -> u_k u_{k+1} u_k^{-1}`, `u_{k+1} -> u_k`. The loop around the last
/// puncture is the derived word, so `k = 2n-1` touches every generator class
/// but still only moves `u_{2n-1}`.
pub fn braid_half_twist(sig: &Signature, k: u32, h: i64) -> Automorphism {
    assert!(k >= 1 && k < sig.punctures(), "braid index {} out of range", k);
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    let mut inv: Vec<Word> = (0..rank).map(Word::gen).collect();
    let uk = sig.u(k) as usize;
    let next = sig.puncture_loop_by_index(k + 1).unwrap();
    let ukw = Word::gen(sig.u(k));
    images[uk] = ukw.concat(&next).concat(&ukw.invert());
    inv[uk] = next.clone();
    if k + 1 < sig.punctures() {
        let un = sig.u(k + 1) as usize;
        images[un] = ukw.clone();
        inv[un] = Word::gen(sig.u(k + 1))
            .invert()
            .concat(&ukw)
            .concat(&Word::gen(sig.u(k + 1)));
    }
    let one = Automorphism::basic(sig, images, inv, &format!("braid_{}", k), 1);
    one.pow(h).unwrap()
}

/// Block swap of the puncture pairs `i` and `i+1` (`1 <= i <= n-1`): the
/// right pair transports plainly to the left slots and the left pair is
/// conjugated past it.
pub fn pair_swap(sig: &Signature, i: u32, h: i64) -> Automorphism {
    assert!(i >= 1 && i < sig.arcs(), "pair swap index {} out of range", i);
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    let mut inv: Vec<Word> = (0..rank).map(Word::gen).collect();
    let l1 = sig.u(2 * i - 1) as usize;
    let l2 = sig.u(2 * i) as usize;
    let r1w = sig.puncture_loop_by_index(2 * i + 1).unwrap();
    let r2w = sig.puncture_loop_by_index(2 * i + 2).unwrap();
    let x = Word::gen(sig.u(2 * i - 1)).concat(&Word::gen(sig.u(2 * i)));
    let y = r1w.concat(&r2w);
    images[l1] = r1w.conjugate(&x);
    images[l2] = r2w.conjugate(&x);
    inv[l1] = r1w.clone();
    inv[l2] = r2w.clone();
    let r1 = sig.u(2 * i + 1) as usize;
    images[r1] = Word::gen(sig.u(2 * i - 1));
    inv[r1] = Word::gen(sig.u(2 * i - 1)).conjugate(&y.invert());
    if 2 * i + 2 < sig.punctures() {
        let r2 = sig.u(2 * i + 2) as usize;
        images[r2] = Word::gen(sig.u(2 * i));
        inv[r2] = Word::gen(sig.u(2 * i)).conjugate(&y.invert());
    }
    let one = Automorphism::basic(sig, images, inv, &format!("lambda_{}", i), 1);
    one.pow(h).unwrap()
}

/// Block swap of the adjacent handles `l` and `l+1`.
pub fn handle_swap(sig: &Signature, l: u32, h: i64) -> Automorphism {
    assert!(l >= 1 && l < sig.genus(), "handle swap index {} out of range", l);
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    let mut inv: Vec<Word> = (0..rank).map(Word::gen).collect();
    let x = sig.handle_word(l);
    let y = sig.handle_word(l + 1);
    let (al, bl) = (sig.a(l) as usize, sig.b(l) as usize);
    let (ar, br) = (sig.a(l + 1) as usize, sig.b(l + 1) as usize);
    images[al] = Word::gen(sig.a(l + 1)).conjugate(&x);
    images[bl] = Word::gen(sig.b(l + 1)).conjugate(&x);
    images[ar] = Word::gen(sig.a(l));
    images[br] = Word::gen(sig.b(l));
    inv[al] = Word::gen(sig.a(l + 1));
    inv[bl] = Word::gen(sig.b(l + 1));
    inv[ar] = Word::gen(sig.a(l)).conjugate(&y.invert());
    inv[br] = Word::gen(sig.b(l)).conjugate(&y.invert());
    let one = Automorphism::basic(sig, images, inv, &format!("rho_{}", l), 1);
    one.pow(h).unwrap()
}

/// `nu_l = t_{alpha_l} t_{beta_l} t_{alpha_l}`: exchanges the meridian and
/// longitude directions of handle `l`. Used to turn meridian-side loops into
/// through-handle loops.
pub fn nu(sig: &Signature, l: u32, h: i64) -> Automorphism {
    let ta = longitude_twist(sig, l, 1);
    let tb = meridian_twist(sig, l, 1);
    ta.compose(&tb).compose(&ta).pow(h).unwrap()
}

/// Semitwist of handle `l`: `omega_l = (t_{alpha_l} t_{beta_l})^3`, the flip
/// whose square is the twist along the handle boundary `dT_l`.
pub fn omega(sig: &Signature, l: u32, h: i64) -> Automorphism {
    let ta = longitude_twist(sig, l, 1);
    let tb = meridian_twist(sig, l, 1);
    ta.compose(&tb).pow(3 * h).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct EncSet {
    punctures: Vec<u32>,
    feet: Vec<u32>,
    handles: Vec<u32>,
}

fn normalize(sig: &Signature, objs: &[Obj]) -> EncSet {
    let mut punctures = Vec::new();
    let mut feet = Vec::new();
    let mut handles = Vec::new();
    for o in objs {
        match *o {
            Obj::Punct(j) => {
                assert!(j >= 1 && j <= sig.punctures(), "puncture {} out of range", j);
                punctures.push(j)
            }
            Obj::FootL(l) => {
                assert!(l >= 1 && l <= sig.genus(), "handle {} out of range", l);
                feet.push(l)
            }
            Obj::Handle(l) => {
                assert!(l >= 1 && l <= sig.genus(), "handle {} out of range", l);
                handles.push(l)
            }
        }
    }
    punctures.sort_unstable();
    punctures.dedup();
    feet.sort_unstable();
    feet.dedup();
    handles.sort_unstable();
    handles.dedup();
    assert!(
        feet.iter().all(|f| !handles.contains(f)),
        "a handle cannot be enclosed both fully and by one foot"
    );
    EncSet { punctures, feet, handles }
}

/// Conjugation by `w^h` on the listed generator indices; identity elsewhere.
fn conjugation_twist(sig: &Signature, w: &Word, gens: &[u32], h: i64, name: &str) -> Automorphism {
    let rank = sig.rank() as u32;
    let wh = w.pow(h);
    let whi = wh.invert();
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    let mut inv: Vec<Word> = (0..rank).map(Word::gen).collect();
    for &gi in gens {
        images[gi as usize] = Word::gen(gi).conjugate(&wh);
        inv[gi as usize] = Word::gen(gi).conjugate(&whi);
    }
    Automorphism::basic(sig, images, inv, name, h)
}

/// Home constructor: left foot of the last handle together with the first
/// `m` punctures (possibly zero). The corridor passes under the partner foot
/// only, so only `a_g` needs the extra meridian dressing.
fn foot_home_twist(sig: &Signature, m: u32, h: i64, name: &str) -> Automorphism {
    let g = sig.genus();
    assert!(g >= 1);
    assert!(m < sig.punctures());
    if m == 0 {
        return meridian_twist(sig, g, h);
    }
    let mut w = sig.foot_word(g);
    for t in 1..=m {
        w.extend_reduced(&Word::gen(sig.u(t)));
    }
    let mut t_ins = Word::gen(sig.b(g));
    for t in 1..=m {
        t_ins.extend_reduced(&Word::gen(sig.u(t)));
    }
    let rank = sig.rank() as u32;
    let wh = w.pow(h);
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    images[sig.b(g) as usize] = Word::gen(sig.b(g)).conjugate(&wh);
    for t in 1..=m {
        images[sig.u(t) as usize] = Word::gen(sig.u(t)).conjugate(&wh);
    }
    images[sig.a(g) as usize] = Word::gen(sig.a(g)).concat(&t_ins.pow(h));
    let inv = nielsen_inverse(sig, &images).expect("foot home twist must be invertible");
    Automorphism::basic(sig, images, inv, name, h)
}

/// Home constructor: left feet of the last two handles.
fn two_feet_home_twist(sig: &Signature, h: i64, name: &str) -> Automorphism {
    let g = sig.genus();
    assert!(g >= 2);
    let w = sig.foot_word(g - 1).concat(&sig.foot_word(g));
    let wh = w.pow(h);
    let rank = sig.rank() as u32;
    let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
    images[sig.b(g - 1) as usize] = Word::gen(sig.b(g - 1)).conjugate(&wh);
    images[sig.b(g) as usize] = Word::gen(sig.b(g)).conjugate(&wh);
    let ins_l = Word::gen(sig.b(g - 1)).concat(&sig.foot_word(g));
    let ins_r = Word::gen(sig.b(g)).concat(&sig.foot_word(g - 1));
    images[sig.a(g - 1) as usize] = Word::gen(sig.a(g - 1)).concat(&ins_l.pow(h));
    images[sig.a(g) as usize] = Word::gen(sig.a(g)).concat(&ins_r.pow(h));
    let inv = nielsen_inverse(sig, &images).expect("two-feet home twist must be invertible");
    Automorphism::basic(sig, images, inv, name, h)
}

/// Is the enclosed set a contiguous run of whole objects along the row?
fn is_contiguous(sig: &Signature, set: &EncSet) -> bool {
    if !set.feet.is_empty() {
        return false;
    }
    // full handles must be consecutive, punctures consecutive, and if both
    // appear the handles must end at g and the punctures start at 1
    let hs_ok = set.handles.windows(2).all(|w| w[1] == w[0] + 1);
    let pu_ok = set.punctures.windows(2).all(|w| w[1] == w[0] + 1);
    if !hs_ok || !pu_ok {
        return false;
    }
    match (set.handles.last(), set.punctures.first()) {
        (Some(&hl), Some(&p1)) => hl == sig.genus() && p1 == 1,
        _ => true,
    }
}

fn direct_contiguous_twist(sig: &Signature, set: &EncSet, h: i64, name: &str) -> Automorphism {
    let mut w = Word::empty();
    let mut gens = Vec::new();
    for &l in &set.handles {
        w.extend_reduced(&sig.handle_word(l));
        gens.push(sig.a(l));
        gens.push(sig.b(l));
    }
    for &j in &set.punctures {
        w.extend_reduced(&sig.puncture_loop_by_index(j).unwrap());
        if j < sig.punctures() {
            gens.push(sig.u(j));
        }
    }
    conjugation_twist(sig, &w, &gens, h, name)
}

/// Chain of handle swaps carrying the handle in slot `g` down to slot `i`
/// (rightmost factor acts first).
fn handle_descent(sig: &Signature, from: u32, to: u32) -> Automorphism {
    let mut acc = Automorphism::identity(sig);
    for l in to..from {
        acc = acc.compose(&handle_swap(sig, l, 1));
    }
    acc
}

/// Twist along the lower-corridor curve enclosing `objs`, handedness `h`.
///
/// Non-contiguous configurations are conjugates of home configurations by
/// explicit braid moves (gathering enclosed punctures to the left) and
/// handle swaps (gathering enclosed feet to the right end of the handle
/// row); that transport defines the curve's routing past skipped objects.
pub fn enclosing_twist(sig: &Signature, objs: &[Obj], h: i64) -> Automorphism {
    let set = normalize(sig, objs);
    let name = format!("tw{:?}", objs);
    enclosing_twist_set(sig, &set, h, &name)
}

fn enclosing_twist_set(sig: &Signature, set: &EncSet, h: i64, name: &str) -> Automorphism {
    if set.feet.is_empty() && set.handles.is_empty() && set.punctures.len() <= 1 {
        // a curve around at most one puncture twists trivially
        return Automorphism::identity(sig);
    }
    if set.feet.is_empty() {
        if is_contiguous(sig, set) {
            return direct_contiguous_twist(sig, set, h, name);
        }
        assert!(
            set.handles.is_empty() || set.punctures.is_empty() || !is_contiguous(sig, set),
            "unsupported mixed non-contiguous configuration"
        );
        assert!(
            set.handles.windows(2).all(|w| w[1] == w[0] + 1),
            "non-adjacent full handles are not in the catalog"
        );
        // gather punctures to close the first gap from the left
        let mut pu = set.punctures.clone();
        let gap = (1..pu.len()).find(|&r| pu[r] > pu[r - 1] + 1);
        if let Some(r) = gap {
            let q = pu[r];
            pu[r] = q - 1;
            let inner = EncSet { punctures: pu, feet: vec![], handles: set.handles.clone() };
            let c = braid_half_twist(sig, q - 1, 1);
            let t = enclosing_twist_set(sig, &inner, h, name);
            return c.compose(&t).compose(&c.invert().unwrap());
        }
        // contiguous punctures but misplaced relative to handles
        unreachable!("gap-free non-contiguous puncture set");
    }
    // sets anchored at left feet
    assert!(set.handles.is_empty(), "feet and full handles do not mix in the catalog");
    match set.feet.len() {
        1 => {
            let i = set.feet[0];
            // gather punctures to 1..=m
            let mut pu = set.punctures.clone();
            if let Some(r) = (0..pu.len()).find(|&r| pu[r] > r as u32 + 1) {
                let q = pu[r];
                pu[r] = q - 1;
                let inner = EncSet { punctures: pu, feet: set.feet.clone(), handles: vec![] };
                let c = braid_half_twist(sig, q - 1, 1);
                let t = enclosing_twist_set(sig, &inner, h, name);
                return c.compose(&t).compose(&c.invert().unwrap());
            }
            let m = set.punctures.len() as u32;
            if i == sig.genus() {
                return foot_home_twist(sig, m, h, name);
            }
            let c = handle_descent(sig, sig.genus(), i);
            let t = foot_home_twist(sig, m, h, name);
            c.compose(&t).compose(&c.invert().unwrap())
        }
        2 => {
            assert!(set.punctures.is_empty(), "two-feet curves carry no punctures");
            let (i, j) = (set.feet[0], set.feet[1]);
            let g = sig.genus();
            let home = two_feet_home_twist(sig, h, name);
            if (i, j) == (g - 1, g) {
                return home;
            }
            // move the left home handle g-1 down to i, then the right one g down to j
            let cl = handle_descent(sig, g - 1, i);
            let cr = handle_descent(sig, g, j);
            let c = cr.compose(&cl);
            c.compose(&home).compose(&c.invert().unwrap())
        }
        _ => panic!("curves enclosing more than two feet are not in the catalog"),
    }
}

/// Dehn twist along a catalog curve recipe.
pub fn dehn_twist_kind(sig: &Signature, kind: &CurveKind, h: i64) -> Automorphism {
    match kind {
        CurveKind::Enclosing(objs) => enclosing_twist(sig, objs, h),
        CurveKind::Longitude(l) => longitude_twist(sig, *l, h),
        CurveKind::NuImage(l, base) => {
            let c = nu(sig, *l, 1);
            let t = dehn_twist_kind(sig, base, h);
            c.compose(&t).compose(&c.invert().unwrap())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::sets;

    fn check_class(t: &Automorphism, what: &str) {
        assert!(t.is_mapping_class(), "{} is not a mapping class", what);
        let h = t.homology_action();
        let d = h.det();
        assert!(
            d == num_bigint::BigInt::from(1) || d == num_bigint::BigInt::from(-1),
            "{} has det {}",
            what,
            d
        );
        assert!(h.preserves_symplectic_quotient(t.sig()), "{} breaks the symplectic form", what);
    }

    #[test]
    fn basic_moves_are_mapping_classes() {
        for (g, n) in [(0u32, 2u32), (1, 1), (2, 2), (3, 3)] {
            let sig = Signature::new(g, n).unwrap();
            for l in 1..=g {
                check_class(&meridian_twist(&sig, l, 1), "meridian");
                check_class(&longitude_twist(&sig, l, 1), "longitude");
                check_class(&omega(&sig, l, 1), "omega");
                check_class(&nu(&sig, l, 1), "nu");
            }
            for l in 1..g {
                check_class(&handle_swap(&sig, l, 1), "rho");
            }
            for k in 1..2 * n {
                check_class(&braid_half_twist(&sig, k, 1), "braid");
            }
            for i in 1..n {
                check_class(&pair_swap(&sig, i, 1), "lambda");
            }
        }
    }

    #[test]
    fn chain_relation() {
        // (t_alpha t_beta)^6 equals the twist along the handle boundary
        for (g, n) in [(1u32, 1u32), (2, 2)] {
            let sig = Signature::new(g, n).unwrap();
            for l in 1..=g {
                let om = omega(&sig, l, 1);
                let sq = om.compose(&om);
                let boundary = enclosing_twist(&sig, &[Obj::Handle(l)], 1);
                assert!(
                    sq.outer_equal(&boundary).is_some(),
                    "omega^2 != dT twist at ({}, {}) handle {}",
                    g,
                    n,
                    l
                );
            }
        }
    }

    #[test]
    fn half_twist_squares_to_pair_twist() {
        let sig = Signature::new(0, 2).unwrap();
        let h1 = braid_half_twist(&sig, 1, 1);
        let sq = h1.compose(&h1);
        let tw = enclosing_twist(&sig, &sets::pair(1), 1);
        assert_eq!(sq.images(), tw.images(), "h_1^2 must equal the pair twist exactly");
        // also at the derived end: k = 2n-1
        let h3 = braid_half_twist(&sig, 3, 1);
        let sq3 = h3.compose(&h3);
        let tw2 = enclosing_twist(&sig, &sets::pair(2), 1);
        assert!(sq3.outer_equal(&tw2).is_some(), "h_3^2 must be the pair-2 twist");
    }

    #[test]
    fn twists_fix_their_curve_word() {
        let sig = Signature::new(2, 2).unwrap();
        let objs = sets::pair(1);
        let t = enclosing_twist(&sig, &objs, 1);
        let w = crate::surface::curve_word(&sig, &CurveKind::Enclosing(objs));
        assert_eq!(t.apply(&w), w);
        assert_eq!(t.apply(&w.pow(3)), w.pow(3));
        let tb = meridian_twist(&sig, 1, 1);
        let beta = Word::gen(sig.b(1));
        assert_eq!(tb.apply(&beta), beta);
    }

    #[test]
    fn disjoint_twists_commute() {
        let sig = Signature::new(2, 2).unwrap();
        let pairs: Vec<Automorphism> = vec![
            enclosing_twist(&sig, &sets::pair(1), 1),
            enclosing_twist(&sig, &sets::pair(2), 1),
            meridian_twist(&sig, 1, 1),
            meridian_twist(&sig, 2, 1),
            enclosing_twist(&sig, &[Obj::Handle(1)], 1),
        ];
        for x in &pairs {
            for y in &pairs {
                let xy = x.compose(y);
                let yx = y.compose(x);
                assert!(xy.outer_equal(&yx).is_some(), "disjoint twists must commute");
            }
        }
    }

    #[test]
    fn transported_twists_are_mapping_classes() {
        let sig = Signature::new(3, 3).unwrap();
        let cases: Vec<Vec<Obj>> = vec![
            sets::spin_out(1, 3),
            sets::spin_out(3, 1),
            sets::track_out(1, 3),
            sets::track_out(2, 1),
            sets::f_loop(1, 2),
            sets::l_loop(2, 3),
            sets::g_loop(1, 3),
            sets::g_loop(1, 2),
            sets::gp_loop(2, 1),
        ];
        for objs in cases {
            let t = enclosing_twist(&sig, &objs, 1);
            check_class(&t, &format!("{:?}", objs));
            let tinv = enclosing_twist(&sig, &objs, -1);
            assert!(t.compose(&tinv).is_identity(), "inverse twist mismatch for {:?}", objs);
            // induced permutation of a twist is trivial
            assert!(t.induced_permutation().unwrap().is_identity());
        }
    }

    #[test]
    fn single_puncture_twist_is_trivial() {
        let sig = Signature::new(1, 2).unwrap();
        let t = enclosing_twist(&sig, &[Obj::Punct(3)], 1);
        assert!(t.is_identity());
    }

    #[test]
    fn nu_maps_meridian_to_longitude_class() {
        let sig = Signature::new(1, 1).unwrap();
        let c = nu(&sig, 1, 1);
        let tb = meridian_twist(&sig, 1, 1);
        let ta = longitude_twist(&sig, 1, 1);
        let conj = c.compose(&tb).compose(&c.invert().unwrap());
        assert!(
            conj.outer_equal(&ta).is_some() || conj.outer_equal(&ta.invert().unwrap()).is_some(),
            "nu must carry the meridian twist to a longitude twist"
        );
    }
}
