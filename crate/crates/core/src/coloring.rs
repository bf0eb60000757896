//! Color sets, partial edge colorings, the "sees" relation and the
//! strong-coloring verifier.

use std::fmt;

use crate::error::GraphError;
use crate::graph::{EdgeId, Graph};

pub type Color = u8;

/// Largest palette any coloring may use. The main algorithm stays within 7
/// and the triangular prism needs 9; the exact solver may go higher on
/// arbitrary inputs, up to one color per edge of its 128-edge limit.
pub const MAX_PALETTE: Color = 127;

/// Palette of the coloring engine.
pub const PALETTE: Color = 7;

/// A set of colors drawn from `1..=MAX_PALETTE`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, ..., k}`.
    pub fn palette(k: Color) -> ColorSet {
        assert!(k <= MAX_PALETTE, "palette {k} exceeds {MAX_PALETTE}");
        ColorSet(((1u128 << k) - 1) << 1)
    }

    pub fn single(c: Color) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        s.insert(c);
        s
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn insert(&mut self, c: Color) {
        debug_assert!((1..=MAX_PALETTE).contains(&c));
        self.0 |= 1 << c;
    }

    #[inline]
    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c);
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        c <= MAX_PALETTE && self.0 & (1 << c) != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    /// Complement relative to the palette `{1, ..., k}`.
    pub fn complement(self, k: Color) -> ColorSet {
        ColorSet::palette(k).difference(self)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros();
                bits &= bits - 1;
                Some(c as Color)
            }
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Edge coloring where some edges may be unassigned.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    assign: Vec<Option<Color>>,
    palette: Color,
}

impl PartialColoring {
    pub fn new(m: usize, palette: Color) -> PartialColoring {
        assert!(palette <= MAX_PALETTE);
        PartialColoring {
            assign: vec![None; m],
            palette,
        }
    }

    pub fn from_colors(colors: Vec<Option<Color>>, palette: Color) -> PartialColoring {
        assert!(palette <= MAX_PALETTE);
        PartialColoring {
            assign: colors,
            palette,
        }
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn set_palette(&mut self, palette: Color) {
        assert!(palette <= MAX_PALETTE);
        self.palette = palette;
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    #[inline]
    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.assign[e]
    }

    #[inline]
    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.assign[e] = Some(c);
    }

    #[inline]
    pub fn unset(&mut self, e: EdgeId) {
        self.assign[e] = None;
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.assign
    }

    pub fn is_total(&self) -> bool {
        self.assign.iter().all(Option::is_some)
    }

    pub fn uncolored(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.assign
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(e, _)| e)
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.used().len()
    }

    pub fn used(&self) -> ColorSet {
        self.assign.iter().flatten().copied().collect()
    }

    /// Applies `map[c]` to every color on `edges`. `map` is indexed by color
    /// and must be a bijection on the palette.
    pub fn permute_on(&mut self, edges: impl IntoIterator<Item = EdgeId>, map: &[Color]) {
        for e in edges {
            if let Some(c) = self.assign[e] {
                self.assign[e] = Some(map[c as usize]);
            }
        }
    }
}

/// Calls `f` on every edge within distance 2 of `e` (excluding `e`). Edges
/// may be reported more than once.
#[inline]
pub fn for_each_seen(g: &Graph, e: EdgeId, mut f: impl FnMut(EdgeId)) {
    let (a, b) = g.edge(e);
    for x in [a, b] {
        for (&y, &xy) in g.neighbors(x).iter().zip(g.incident(x)) {
            if xy == e {
                continue;
            }
            f(xy);
            for &yz in g.incident(y) {
                if yz != xy && yz != e {
                    f(yz);
                }
            }
        }
    }
}

/// Sorted, deduplicated list of the edges `e` sees.
pub fn seen_edges(g: &Graph, e: EdgeId) -> Vec<EdgeId> {
    let mut out = Vec::new();
    for_each_seen(g, e, |f| out.push(f));
    out.sort_unstable();
    out.dedup();
    out
}

/// Colors on edges that `e` sees. Ignores the color of `e` itself.
#[inline]
pub fn seen_colors(g: &Graph, c: &PartialColoring, e: EdgeId) -> ColorSet {
    let mut s = ColorSet::EMPTY;
    for_each_seen(g, e, |f| {
        if let Some(col) = c.get(f) {
            s.insert(col);
        }
    });
    s
}

/// Whether `e` and `f` are at distance 1 or 2: they share an endpoint, or
/// some edge touches both.
pub fn sees(g: &Graph, e: EdgeId, f: EdgeId) -> Result<bool, GraphError> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    if e == f {
        return Err(GraphError::SameEdge);
    }
    Ok(sees_unchecked(g, e, f))
}

#[inline]
pub(crate) fn sees_unchecked(g: &Graph, e: EdgeId, f: EdgeId) -> bool {
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    if a == c || a == d || b == c || b == d {
        return true;
    }
    g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
}

/// The square of the line graph: vertex `i` is edge `i` of `g`, adjacent
/// when the edges see each other.
pub fn conflict_graph(g: &Graph) -> Graph {
    let mut pairs = Vec::new();
    for e in 0..g.m() {
        for f in seen_edges(g, e) {
            if e < f {
                pairs.push((e, f));
            }
        }
    }
    Graph::from_edges(g.m(), pairs).expect("pairs are canonical and distinct")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// Two edges that see each other share `color`; `e < f`.
    SameColorConflict { e: EdgeId, f: EdgeId, color: Color },
    Uncolored { e: EdgeId },
    ColorOutOfPalette { e: EdgeId, color: Color },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SameColorConflict { e, f: g, color } => {
                write!(f, "edges {e} and {g} see each other and share color {color}")
            }
            Violation::Uncolored { e } => write!(f, "edge {e} is uncolored"),
            Violation::ColorOutOfPalette { e, color } => {
                write!(f, "edge {e} has color {color} outside the palette")
            }
        }
    }
}

/// All violations of `c` as a strong edge coloring of `g`: palette
/// violations, then conflicting pairs in ascending `(e, f)` order, then
/// (when `require_total`) uncolored edges.
pub fn verify_strong(g: &Graph, c: &PartialColoring, require_total: bool) -> Vec<Violation> {
    assert_eq!(c.len(), g.m(), "coloring does not match the graph");
    let mut out = Vec::new();
    for e in 0..g.m() {
        if let Some(col) = c.get(e) {
            if col == 0 || col > c.palette() {
                out.push(Violation::ColorOutOfPalette { e, color: col });
            }
        }
    }
    let mut seen = Vec::new();
    for e in 0..g.m() {
        let Some(col) = c.get(e) else { continue };
        seen.clear();
        for_each_seen(g, e, |f| {
            if f > e && c.get(f) == Some(col) {
                seen.push(f);
            }
        });
        seen.sort_unstable();
        seen.dedup();
        out.extend(seen.iter().map(|&f| Violation::SameColorConflict { e, f, color: col }));
    }
    if require_total {
        out.extend(c.uncolored().map(|e| Violation::Uncolored { e }));
    }
    out
}
