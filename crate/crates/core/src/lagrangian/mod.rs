//! The double `d = g ⊕ g`, Samelson subalgebras, Evens–Lu representatives,
//! Belavin–Drinfeld triples and generalized Kähler pairs.

mod double;
mod evens_lu;
mod pair;
mod samelson;

pub use double::{bracket_closure, Double};
pub use evens_lu::{
    bd_candidates, diagonal, enumerate_bd, evens_lu, graph_of_psi, is_isometry, sample_f, z_p, BDTriple, LagrangianSubalgebra,
    BD_RANK_BOUND,
};
pub use pair::{gk_pair, split_classify, Classification, DualPair, GKPair, Splitting};
pub use samelson::{samelson, SamelsonSubalgebra};
