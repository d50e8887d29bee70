/// Size caps shared by constructors, enumerators, and searches.
///
/// Everything in this crate is exhaustive, so every exponential quantity is
/// checked against a cap before work starts. Exceeding a cap is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest groupoid (element count) a constructor will produce.
    pub max_groupoid: usize,
    /// Largest monoid (element count) an enumeration will produce.
    pub max_monoid: usize,
    /// Largest Cayley table (number of products) that will be materialized.
    pub max_products: u128,
    /// Above this many triples, table associativity is not checked exhaustively.
    pub max_assoc_triples: u128,
    /// Largest order accepted by the groupoid census.
    pub max_census_order: usize,
    /// Largest number of maps the `d∘φ = φ∘r` sweep will visit.
    pub max_sweep: u128,
    /// Largest number of automorphisms used by the functor audit.
    pub max_automorphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_groupoid: 64,
            max_monoid: 1_000_000,
            max_products: 100_000_000,
            max_assoc_triples: 1_000_000_000,
            max_census_order: 6,
            max_sweep: 1_000_000,
            max_automorphisms: 24,
        }
    }
}
