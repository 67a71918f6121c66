//! Fixtures shared by the criterion benches.

use zic_core::arith::MultiQuad;
use zic_core::free::{FreeWord, TupleWord};
use zic_core::presentation::samples;
use zic_core::reductions::{
    build_stabilizer, build_ulcp_for, build_urcp, internal_to_corner, CornerInstance,
    ExternalInstance, StabilizerInstance,
};
use zic_core::schottky::SchottkyPair;

pub fn stabilizer() -> StabilizerInstance {
    let p = samples::sample("z2-star-z").expect("shipped");
    build_stabilizer(
        &p,
        &FreeWord::parse(2, "b").expect("word"),
        &SchottkyPair::canonical(),
    )
    .expect("builds")
}

/// A free-group query with no witness, so searches run to exhaustion.
pub fn exhausting_ulcp() -> ExternalInstance {
    let p = samples::sample("free-f2").expect("shipped");
    let q = TupleWord::parse(2, "(ab, ab)").expect("word");
    build_ulcp_for(&p, &q, &SchottkyPair::canonical()).expect("builds")
}

pub fn compositum_corner() -> CornerInstance<MultiQuad> {
    let p = samples::sample("z2-star-z").expect("shipped");
    let q = TupleWord::parse(2, "(a, b, ab)").expect("word");
    internal_to_corner(&build_urcp(&p, &q, &SchottkyPair::canonical()).expect("builds"))
        .expect("converts")
}

/// Embedded words of F_2 up to length 2, paired with the tuple `(w, w)`.
pub fn membership_queries() -> Vec<(TupleWord, usize)> {
    zic_core::free::enumerate_reduced(2, 2)
        .map(|w| {
            let e = w.embed_in_f2();
            (TupleWord::new(vec![e.clone(), e]).expect("same rank"), 3)
        })
        .collect()
}
