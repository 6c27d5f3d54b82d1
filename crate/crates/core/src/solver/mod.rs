//! Solvers for processive and distributive tangle-equation systems.

pub mod distributive;
pub mod montesinos;
pub mod processive;
pub mod verdict;

pub use distributive::{
    arcs, reduced_filter, solve_distributive, Arc, Bucket, DistributiveSystem, LocallyKnottedSolution, MontesinosSolution,
    PrimeBucket, SolutionSet,
};
pub use montesinos::{family_members_where, montesinos_distance_one_family, FamilyMember, FamilyParams};
pub use processive::{
    chirality_filter, evaluate_candidate, predict_product, prefilter_pairs, solve_processive, solve_processive_with,
    CandidateOutcome, ChiralityObservation, ProcessiveReport, ProcessiveSolution, ProcessiveSystem, ProductConstraint,
    SearchBounds,
};
pub use verdict::{Rule, Verdict};
