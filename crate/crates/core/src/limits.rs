/// Size guards for the exponential searches.
///
/// Every guarded operation has a plain form using [`Limits::default`] and a
/// `*_with_limits` form; the CLI maps `--unsafe-no-guards` to
/// [`Limits::unbounded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex bound for spanning-tree enumeration.
    pub tree_enum_n: usize,
    /// Cotree size for brute-force conditional sums.
    pub brute_m: usize,
    /// Cotree size for the matching-expansion conditional sums.
    pub fast_m: usize,
    /// Cotree size for the interlacing audit.
    pub audit_m: usize,
    /// Cotree size for classifying partial orientations.
    pub classify_m: usize,
    /// Corpus generation vertex bound.
    pub corpus_n: usize,
    /// Edge bound for complete-orientation searches.
    pub complete_edges: usize,
    /// Vertex bound for the partial-orientation minimum.
    pub partial_n: usize,
    /// Edge bound for the all-mixed-graphs tier.
    pub mixed_edges: usize,
    /// Total (tree, orientation) pairs the partial-orientation minimum will visit.
    pub partial_work: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tree_enum_n: 10,
            brute_m: 16,
            fast_m: 20,
            audit_m: 10,
            classify_m: 12,
            corpus_n: 7,
            complete_edges: 20,
            partial_n: 7,
            mixed_edges: 6,
            partial_work: 1 << 20,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            tree_enum_n: usize::MAX,
            brute_m: 62,
            fast_m: 62,
            audit_m: 62,
            classify_m: 62,
            corpus_n: 11,
            complete_edges: 62,
            partial_n: usize::MAX,
            mixed_edges: 38,
            partial_work: usize::MAX,
        }
    }
}
