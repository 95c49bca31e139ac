//! Core domain types: grids, vertices, leapers, tours, and the integer
//! distance/parity primitives everything else is built on.
//!
//! All distances are kept *squared* so that comparisons stay in exact
//! integer arithmetic. On a binary grid the squared Euclidean distance
//! between two vertices equals their Hamming distance, which is why the
//! search engine can run entirely on machine words.
//!
//! Bit order convention: coordinate `x1` lives in the least-significant
//! bit of a word. Text serialization (leftmost character = `x1`) is
//! defined in [`crate::tourio`]; this is the only place the two meet.

use std::fmt;

/// Parity of a coordinate sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_sum(sum: u64) -> Parity {
        if sum % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Whether a tour returns to its starting vertex with one more step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closure {
    Closed,
    Open,
}

/// Errors from the domain-type constructors and primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Two vertices from grids of different dimension.
    DimensionMismatch { left: usize, right: usize },
    /// An operation that only exists on binary (n = 2) grids.
    NonBinary,
    /// Grid parameters outside the supported range.
    InvalidGrid { n: u16, k: u16 },
    /// Dimension too large for the machine-word fast path.
    DimensionTooLarge { k: u16, max: u16 },
    /// A coordinate not in `0..n`.
    CoordOutOfRange { index: usize, coord: u16, n: u16 },
    /// A word with bits set at positions `>= k`.
    WordOutOfRange { index: usize },
    /// Tours hold at least two vertices.
    TooShort { len: usize },
    /// A count that does not fit the supported integer range.
    Overflow,
    /// A leaper must move: (a, b) = (0, 0) is not a piece.
    ZeroLeaper,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right} coordinates")
            }
            ModelError::NonBinary => write!(f, "operation requires a binary grid"),
            ModelError::InvalidGrid { n, k } => write!(f, "unsupported grid: n = {n}, k = {k}"),
            ModelError::DimensionTooLarge { k, max } => {
                write!(f, "dimension {k} exceeds the word limit of {max}")
            }
            ModelError::CoordOutOfRange { index, coord, n } => {
                write!(f, "coordinate {coord} at position {index} not below n = {n}")
            }
            ModelError::WordOutOfRange { index } => {
                write!(f, "word at position {index} has bits outside the grid dimension")
            }
            ModelError::TooShort { len } => {
                write!(f, "a tour holds at least two vertices, got {len}")
            }
            ModelError::Overflow => write!(f, "vertex count does not fit the supported range"),
            ModelError::ZeroLeaper => write!(f, "leaper (0,0) does not move"),
        }
    }
}

impl std::error::Error for ModelError {}

/// The grid `{0, …, n-1}^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    n: u16,
    k: u16,
}

impl GridSpec {
    /// Largest side length supported.
    pub const MAX_SIDE: u16 = 64;
    /// Largest dimension supported for general grids.
    pub const MAX_DIM: u16 = 64;
    /// Largest dimension representable as a machine word (binary grids).
    pub const MAX_BINARY_DIM: u16 = 30;

    pub fn new(n: u16, k: u16) -> Result<GridSpec, ModelError> {
        if n == 0 || k == 0 || n > Self::MAX_SIDE || k > Self::MAX_DIM {
            return Err(ModelError::InvalidGrid { n, k });
        }
        Ok(GridSpec { n, k })
    }

    /// The binary grid `{0,1}^k`, bounded so vertices fit in a `u32` word.
    pub fn binary(k: u16) -> Result<GridSpec, ModelError> {
        if k == 0 {
            return Err(ModelError::InvalidGrid { n: 2, k });
        }
        if k > Self::MAX_BINARY_DIM {
            return Err(ModelError::DimensionTooLarge {
                k,
                max: Self::MAX_BINARY_DIM,
            });
        }
        Ok(GridSpec { n: 2, k })
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn is_binary(&self) -> bool {
        self.n == 2
    }

    /// `n^k`, or an error when it exceeds `u128`.
    pub fn vertex_count(&self) -> Result<u128, ModelError> {
        (self.n as u128)
            .checked_pow(self.k as u32)
            .ok_or(ModelError::Overflow)
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        v.coords.len() == self.k as usize && v.coords.iter().all(|&c| c < self.n)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 2 {
            write!(f, "binary {}-cube", self.k)
        } else {
            write!(f, "{}-ary {}-cube", self.n, self.k)
        }
    }
}

/// A grid point, stored as its coordinate tuple.
///
/// Binary vertices have a word fast path ([`Vertex::from_word`] /
/// [`Vertex::to_word`]); conversions are always explicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    coords: Vec<u16>,
}

impl Vertex {
    pub fn new(coords: Vec<u16>) -> Vertex {
        assert!(!coords.is_empty(), "a vertex has at least one coordinate");
        Vertex { coords }
    }

    pub fn origin(k: u16) -> Vertex {
        Vertex::new(vec![0; k as usize])
    }

    /// Decode a binary vertex from a word: bit `i` holds coordinate `x_{i+1}`.
    pub fn from_word(word: u32, k: u16) -> Vertex {
        assert!(k >= 1 && k <= GridSpec::MAX_BINARY_DIM);
        assert!(
            k == 32 || word >> k == 0,
            "word has bits outside the dimension"
        );
        Vertex::new((0..k).map(|i| ((word >> i) & 1) as u16).collect())
    }

    /// Encode as a word; fails unless every coordinate is 0 or 1.
    pub fn to_word(&self) -> Result<u32, ModelError> {
        if self.coords.len() > GridSpec::MAX_BINARY_DIM as usize {
            return Err(ModelError::DimensionTooLarge {
                k: self.coords.len() as u16,
                max: GridSpec::MAX_BINARY_DIM,
            });
        }
        let mut word = 0u32;
        for (i, &c) in self.coords.iter().enumerate() {
            match c {
                0 => {}
                1 => word |= 1 << i,
                _ => return Err(ModelError::NonBinary),
            }
        }
        Ok(word)
    }

    pub fn coords(&self) -> &[u16] {
        &self.coords
    }

    pub fn k(&self) -> u16 {
        self.coords.len() as u16
    }

    pub fn is_binary(&self) -> bool {
        self.coords.iter().all(|&c| c <= 1)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Squared Euclidean distance between two vertices of the same dimension.
pub fn squared_distance(u: &Vertex, v: &Vertex) -> Result<u64, ModelError> {
    if u.coords.len() != v.coords.len() {
        return Err(ModelError::DimensionMismatch {
            left: u.coords.len(),
            right: v.coords.len(),
        });
    }
    Ok(u.coords
        .iter()
        .zip(&v.coords)
        .map(|(&a, &b)| {
            let d = a.abs_diff(b) as u64;
            d * d
        })
        .sum())
}

/// Hamming distance between two binary vertices (popcount of the word XOR).
///
/// Equals [`squared_distance`] whenever both vertices are binary.
pub fn hamming_distance(u: &Vertex, v: &Vertex) -> Result<u32, ModelError> {
    if u.coords.len() != v.coords.len() {
        return Err(ModelError::DimensionMismatch {
            left: u.coords.len(),
            right: v.coords.len(),
        });
    }
    Ok(word_distance(u.to_word()?, v.to_word()?))
}

/// Parity of the coordinate sum.
pub fn vertex_parity(v: &Vertex) -> Parity {
    Parity::of_sum(v.coords.iter().map(|&c| c as u64).sum())
}

/// Coordinate-wise complement of a binary vertex on the mask's positions.
pub fn xor_mask(v: &Vertex, mask: u32) -> Vertex {
    let word = v.to_word().expect("xor_mask requires a binary vertex");
    let k = v.k();
    assert!(
        k == 32 || mask >> k == 0,
        "mask has bits outside the dimension"
    );
    Vertex::from_word(word ^ mask, k)
}

/// Hamming distance between two binary words.
#[inline(always)]
pub fn word_distance(a: u32, b: u32) -> u32 {
    (a ^ b).count_ones()
}

/// Parity of a binary word's coordinate sum, i.e. of its popcount.
#[inline(always)]
pub fn word_parity(w: u32) -> Parity {
    if w.count_ones() % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// A fairy-chess leaper, identified by its canonical move pair.
///
/// The pair is normalized so that `a <= b`; the squared jump length
/// `L = a^2 + b^2` is what matters on binary grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LeaperSpec {
    a: u16,
    b: u16,
}

impl LeaperSpec {
    pub fn new(a: u16, b: u16) -> Result<LeaperSpec, ModelError> {
        if a == 0 && b == 0 {
            return Err(ModelError::ZeroLeaper);
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Ok(LeaperSpec { a, b })
    }

    pub fn wazir() -> LeaperSpec {
        LeaperSpec { a: 0, b: 1 }
    }

    pub fn knight() -> LeaperSpec {
        LeaperSpec { a: 1, b: 2 }
    }

    pub fn threeleaper() -> LeaperSpec {
        LeaperSpec { a: 0, b: 3 }
    }

    pub fn zebra() -> LeaperSpec {
        LeaperSpec { a: 2, b: 3 }
    }

    pub fn a(&self) -> u16 {
        self.a
    }

    pub fn b(&self) -> u16 {
        self.b
    }

    /// Squared jump length `L = a^2 + b^2`.
    pub fn squared_length(&self) -> u64 {
        let (a, b) = (self.a as u64, self.b as u64);
        a * a + b * b
    }

    /// Traditional piece name for small pairs, when one exists.
    pub fn name(&self) -> Option<&'static str> {
        match (self.a, self.b) {
            (0, 1) => Some("wazir"),
            (0, 2) => Some("dabbaba"),
            (0, 3) => Some("threeleaper"),
            (0, 4) => Some("fourleaper"),
            (1, 1) => Some("ferz"),
            (1, 2) => Some("knight"),
            (1, 3) => Some("camel"),
            (1, 4) => Some("giraffe"),
            (2, 2) => Some("alfil"),
            (2, 3) => Some("zebra"),
            (2, 4) => Some("stag"),
            (3, 3) => Some("tripper"),
            (3, 4) => Some("antelope"),
            (4, 4) => Some("commuter"),
            _ => None,
        }
    }
}

impl fmt::Display for LeaperSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => write!(f, "({},{})-leaper ({name})", self.a, self.b),
            None => write!(f, "({},{})-leaper", self.a, self.b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TourRepr {
    /// Binary grids: one word per vertex, bit `i` = coordinate `x_{i+1}`.
    Binary(Vec<u32>),
    /// General grids: explicit coordinate tuples. Only used in-memory.
    General(Vec<Vertex>),
}

/// An ordered vertex sequence claimed to visit a whole grid at a fixed
/// squared step length.
///
/// `Tour` itself is a carrier: constructors check only shape (dimension,
/// coordinate range, at least two vertices). Whether the sequence really
/// is a closed or open tour is decided by [`crate::tourio::verify_tour`];
/// the step length and closure are measured from the data, never stored,
/// so a parsed file cannot smuggle in a false tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    grid: GridSpec,
    repr: TourRepr,
}

impl Tour {
    /// A binary tour from words. Rejects words with bits at positions `>= k`.
    pub fn from_words(k: u16, words: Vec<u32>) -> Result<Tour, ModelError> {
        let grid = GridSpec::binary(k)?;
        if words.len() < 2 {
            return Err(ModelError::TooShort { len: words.len() });
        }
        if let Some(index) = words.iter().position(|&w| k != 32 && w >> k != 0) {
            return Err(ModelError::WordOutOfRange { index });
        }
        Ok(Tour {
            grid,
            repr: TourRepr::Binary(words),
        })
    }

    /// A general-grid tour from explicit vertices.
    pub fn from_vertices(grid: GridSpec, vertices: Vec<Vertex>) -> Result<Tour, ModelError> {
        if grid.n() < 2 {
            // A 1-wide grid has a single vertex; no tour can exist on it.
            return Err(ModelError::InvalidGrid {
                n: grid.n(),
                k: grid.k(),
            });
        }
        if vertices.len() < 2 {
            return Err(ModelError::TooShort {
                len: vertices.len(),
            });
        }
        for v in &vertices {
            if v.k() != grid.k() {
                return Err(ModelError::DimensionMismatch {
                    left: v.k() as usize,
                    right: grid.k() as usize,
                });
            }
            if let Some((index, &coord)) = v.coords().iter().enumerate().find(|&(_, &c)| c >= grid.n()) {
                return Err(ModelError::CoordOutOfRange {
                    index,
                    coord,
                    n: grid.n(),
                });
            }
        }
        Ok(Tour {
            grid,
            repr: TourRepr::General(vertices),
        })
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            TourRepr::Binary(words) => words.len(),
            TourRepr::General(points) => points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false // constructors require at least two vertices
    }

    /// The word sequence, when this tour lives on a binary grid.
    pub fn words(&self) -> Option<&[u32]> {
        match &self.repr {
            TourRepr::Binary(words) => Some(words),
            TourRepr::General(_) => None,
        }
    }

    /// The vertex at position `i` (materialized for binary tours).
    pub fn vertex(&self, i: usize) -> Vertex {
        match &self.repr {
            TourRepr::Binary(words) => Vertex::from_word(words[i], self.grid.k()),
            TourRepr::General(points) => points[i].clone(),
        }
    }

    fn entry_distance(&self, i: usize, j: usize) -> u64 {
        match &self.repr {
            TourRepr::Binary(words) => word_distance(words[i], words[j]) as u64,
            TourRepr::General(points) => {
                squared_distance(&points[i], &points[j]).expect("same grid")
            }
        }
    }

    /// Squared length of the edge from entry `i` to entry `i + 1`.
    pub fn edge_len(&self, i: usize) -> u64 {
        self.entry_distance(i, i + 1)
    }

    /// Squared length of the first edge: the step the sequence appears to use.
    pub fn step_len(&self) -> u64 {
        self.edge_len(0)
    }

    /// Squared distance from the last entry back to the first.
    pub fn closing_len(&self) -> u64 {
        self.entry_distance(self.len() - 1, 0)
    }

    /// Closed or open relative to the step length `d`.
    pub fn closure(&self, d: u64) -> Closure {
        if self.closing_len() == d {
            Closure::Closed
        } else {
            Closure::Open
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[u16]) -> Vertex {
        Vertex::new(coords.to_vec())
    }

    #[test]
    fn squared_distance_examples() {
        // The (3,4)- and (0,5)-leapers share L = 25 on a 6-wide plane.
        assert_eq!(squared_distance(&v(&[0, 0]), &v(&[3, 4])).unwrap(), 25);
        assert_eq!(squared_distance(&v(&[0, 0]), &v(&[5, 0])).unwrap(), 25);
        let u = v(&[2, 5, 1]);
        assert_eq!(squared_distance(&u, &u).unwrap(), 0);
    }

    #[test]
    fn squared_distance_dimension_mismatch() {
        assert_eq!(
            squared_distance(&v(&[0, 0]), &v(&[0, 0, 0])),
            Err(ModelError::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn squared_distance_symmetric_and_zero_on_diagonal() {
        let points = [v(&[0, 3, 1]), v(&[2, 2, 0]), v(&[5, 0, 4]), v(&[1, 1, 1])];
        for a in &points {
            for b in &points {
                assert_eq!(
                    squared_distance(a, b).unwrap(),
                    squared_distance(b, a).unwrap()
                );
                assert_eq!(squared_distance(a, b).unwrap() == 0, a == b);
            }
        }
    }

    #[test]
    fn hamming_distance_examples() {
        let zero11 = Vertex::origin(11);
        let first = v(&[0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(hamming_distance(&zero11, &first).unwrap(), 9);

        let w = 0b101_1010_0101_101u32; // any k = 15 word
        let a = Vertex::from_word(w, 15);
        let b = Vertex::from_word(w ^ 0x7FFF, 15);
        assert_eq!(hamming_distance(&a, &b).unwrap(), 15);
        assert_eq!(hamming_distance(&a, &a).unwrap(), 0);
    }

    #[test]
    fn hamming_distance_rejects_non_binary() {
        assert_eq!(
            hamming_distance(&v(&[0, 2]), &v(&[0, 1])),
            Err(ModelError::NonBinary)
        );
    }

    #[test]
    fn hamming_equals_squared_on_binary() {
        for a in 0u32..64 {
            for b in 0u32..64 {
                let u = Vertex::from_word(a, 6);
                let w = Vertex::from_word(b, 6);
                assert_eq!(
                    hamming_distance(&u, &w).unwrap() as u64,
                    squared_distance(&u, &w).unwrap()
                );
            }
        }
    }

    #[test]
    fn vertex_parity_examples() {
        assert_eq!(vertex_parity(&v(&[1, 0, 1, 1, 1, 1])), Parity::Odd);
        assert_eq!(vertex_parity(&Vertex::origin(9)), Parity::Even);
        let from_fifteen_cube = v(&[0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0]);
        assert_eq!(vertex_parity(&from_fifteen_cube), Parity::Odd);
    }

    #[test]
    fn xor_mask_examples() {
        let u = v(&[1, 0, 1]);
        assert_eq!(xor_mask(&u, 0), u);
        assert_eq!(xor_mask(&Vertex::origin(4), 0b1111), v(&[1, 1, 1, 1]));

        // Complementing the lowest 12 coordinates of (0,...,0,1) in k = 16.
        let tip = Vertex::from_word(1 << 15, 16);
        let flipped = xor_mask(&tip, (1 << 12) - 1);
        let mut expected = vec![1u16; 12];
        expected.extend_from_slice(&[0, 0, 0, 1]);
        assert_eq!(flipped, Vertex::new(expected));
    }

    #[test]
    fn xor_mask_is_an_isometry() {
        for a in 0u32..32 {
            for b in 0u32..32 {
                for mask in [0u32, 0b1, 0b11010, 0b11111] {
                    let d0 = word_distance(a, b);
                    let d1 = word_distance(a ^ mask, b ^ mask);
                    assert_eq!(d0, d1);
                }
            }
        }
    }

    #[test]
    fn word_round_trip() {
        for word in [0u32, 1, 0b1011, (1 << 11) - 1] {
            let vert = Vertex::from_word(word, 11);
            assert_eq!(vert.to_word().unwrap(), word);
        }
    }

    #[test]
    fn leaper_normalization_and_lengths() {
        let knight = LeaperSpec::new(2, 1).unwrap();
        assert_eq!((knight.a(), knight.b()), (1, 2));
        assert_eq!(knight, LeaperSpec::knight());
        assert_eq!(LeaperSpec::wazir().squared_length(), 1);
        assert_eq!(LeaperSpec::knight().squared_length(), 5);
        assert_eq!(LeaperSpec::threeleaper().squared_length(), 9);
        assert_eq!(LeaperSpec::zebra().squared_length(), 13);
        assert_eq!(LeaperSpec::new(2, 2).unwrap().name(), Some("alfil"));
        assert_eq!(LeaperSpec::new(0, 0), Err(ModelError::ZeroLeaper));
    }

    #[test]
    fn grid_bounds() {
        assert!(GridSpec::new(2, 11).is_ok());
        assert!(GridSpec::new(0, 3).is_err());
        assert!(GridSpec::new(3, 0).is_err());
        assert!(GridSpec::binary(31).is_err());
        assert_eq!(GridSpec::binary(11).unwrap().vertex_count().unwrap(), 2048);
        // 64^22 = 2^132 does not fit u128.
        assert_eq!(
            GridSpec::new(64, 22).unwrap().vertex_count(),
            Err(ModelError::Overflow)
        );
    }

    #[test]
    fn tour_constructors_enforce_shape() {
        assert!(Tour::from_words(3, vec![0, 1, 3, 2, 6, 7, 5, 4]).is_ok());
        assert_eq!(
            Tour::from_words(3, vec![0]),
            Err(ModelError::TooShort { len: 1 })
        );
        assert_eq!(
            Tour::from_words(2, vec![0, 4]),
            Err(ModelError::WordOutOfRange { index: 1 })
        );

        let grid = GridSpec::new(3, 2).unwrap();
        assert!(Tour::from_vertices(grid, vec![v(&[0, 0]), v(&[2, 1])]).is_ok());
        assert!(Tour::from_vertices(grid, vec![v(&[0, 0]), v(&[3, 0])]).is_err());
        let line = GridSpec::new(1, 4).unwrap();
        assert!(Tour::from_vertices(line, vec![v(&[0, 0, 0, 0]); 2]).is_err());
    }

    #[test]
    fn tour_measured_properties() {
        let square = Tour::from_words(2, vec![0, 1, 3, 2]).unwrap();
        assert_eq!(square.step_len(), 1);
        assert_eq!(square.closing_len(), 1);
        assert_eq!(square.closure(1), Closure::Closed);
        assert_eq!(square.closure(2), Closure::Open);
        assert_eq!(square.vertex(1), v(&[1, 0]));
    }
}
