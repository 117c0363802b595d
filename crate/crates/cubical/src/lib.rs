//! Finite, dimension-truncated cubical sets with the categorical
//! machinery needed to check, on small instances, how monomorphism
//! classifiers, double-negation-stable h-propositions, Dedekind cocut
//! reals and a small computability kernel fit together.
//!
//! Everything here is exhaustively decidable: level sets are finite,
//! hom-sets of the cube category are finite, and every claimed law is
//! validated by enumeration or seeded property search.

pub mod classifier;
pub mod cube;
pub mod gen;
pub mod kleene;
pub mod presheaf;
pub mod reals;
pub mod report;
pub mod verify;

// Compile and run every code block of the guide as a doc-test, so the
// book in `book/` can never drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cube-category.md")]
    mod cube_category {}
    #[doc = include_str!("../../../book/src/cubical-sets.md")]
    mod cubical_sets_chapter {}
    #[doc = include_str!("../../../book/src/negation.md")]
    mod negation {}
    #[doc = include_str!("../../../book/src/classifier.md")]
    mod classifier {}
    #[doc = include_str!("../../../book/src/reals.md")]
    mod reals {}
    #[doc = include_str!("../../../book/src/machines.md")]
    mod machines {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
