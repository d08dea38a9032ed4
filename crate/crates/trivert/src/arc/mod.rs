//! Generic proper arcs in the fixed singular-value model, their crossing
//! words, and reduction to connected-sum normal forms.

mod exact;
mod moves;
mod templates;
mod word;

pub use moves::{
    decompose, decompose_word, evaluate, reduce, reduce_with_order, split, DecomposeError,
    ReduceOrder,
};
pub use templates::{
    boundary_chord, composite_arc, random_plan, standard_arc, CompositeFamily, CompositePlan,
    DipKind, Dir, StandardArc,
};
pub use word::{
    crossing_word, Arc, ArcError, Circle, CrossingWord, EdgeC1, EdgeC2, Event, Region,
    SingularModel, CUSP_RAYS,
};

pub use exact::Rat;
