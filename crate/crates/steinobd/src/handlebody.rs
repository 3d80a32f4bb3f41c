//! Stein handlebodies built from one 0-handle and 2-handles, no 1-handles.
//!
//! Each 2-handle is attached along a Legendrian knot with framing one less
//! than its Thurston-Bennequin number; the handlebody is simply connected
//! with `H_2 = Z^n`, one generator per handle in handle order. The first
//! Chern class is the cochain sending each generator to the rotation number
//! of its attaching circle, and the rotation divisor is the gcd of those
//! values.

use crate::front::{FrontDiagram, FrontDocument, FrontError, OrientedFront};
use crate::lattice::IntVector;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HandlebodyError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("front file {path}: {source}")]
    FrontFile { path: PathBuf, source: FrontError },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("a Stein handlebody needs at least one 2-handle")]
    Empty,
    #[error("handle {handle}: source component {component} out of range (front has {count} components)")]
    SourceOutOfRange {
        handle: usize,
        component: usize,
        count: usize,
    },
    #[error("handle {handle}: stored {field} {stored} disagrees with the front value {computed}")]
    SourceMismatch {
        handle: usize,
        field: &'static str,
        stored: i64,
        computed: i64,
    },
    #[error("handle {handle} has a front source but the handlebody has no front")]
    SourceWithoutFront { handle: usize },
    #[error("linking matrix must be symmetric {n}x{n}")]
    BadLinkingMatrix { n: usize },
    #[error("link entry ({i}, {j}) out of range for {handles} handles")]
    LinkOutOfRange { i: usize, j: usize, handles: usize },
    #[error("no linking data: provide link entries or attach fronts to every handle")]
    MissingLinking,
    #[error("rotation divisor must be >= 0, got {got}")]
    NegativeDivisor { got: i64 },
}

/// One 4-dimensional 2-handle: attaching-circle invariants plus an optional
/// component index into the owning handlebody's shared front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteinHandle {
    tb: i64,
    rot: i64,
    source: Option<usize>,
}

impl SteinHandle {
    pub fn new(tb: i64, rot: i64) -> Self {
        SteinHandle {
            tb,
            rot,
            source: None,
        }
    }

    pub fn tb(&self) -> i64 {
        self.tb
    }

    pub fn rot(&self) -> i64 {
        self.rot
    }

    /// Stein 2-handle framing, always one less than tb.
    pub fn framing(&self) -> i64 {
        self.tb - 1
    }

    /// Component index into the handlebody's shared front, if attached.
    pub fn source(&self) -> Option<usize> {
        self.source
    }

    /// Whether a Legendrian unknot with these invariants exists: starting
    /// from tb -1, each stabilization trades one unit of tb for one unit of
    /// rot in either direction.
    pub fn is_unknot_realizable(&self) -> bool {
        self.tb <= -1 && self.rot.abs() <= -self.tb - 1 && (self.rot - self.tb - 1) % 2 == 0
    }
}

/// An ordered list of 2-handles, optionally realized by a shared front and
/// optionally carrying an explicit linking matrix.
#[derive(Debug, Clone)]
pub struct SteinHandlebody {
    handles: Vec<SteinHandle>,
    front: Option<OrientedFront>,
    linking: Option<Vec<Vec<i64>>>,
}

impl SteinHandlebody {
    fn new_checked(
        handles: Vec<SteinHandle>,
        front: Option<OrientedFront>,
        linking: Option<Vec<Vec<i64>>>,
    ) -> Result<Self, HandlebodyError> {
        if handles.is_empty() {
            return Err(HandlebodyError::Empty);
        }
        for (i, h) in handles.iter().enumerate() {
            let Some(component) = h.source else { continue };
            let Some(front) = front.as_ref() else {
                return Err(HandlebodyError::SourceWithoutFront { handle: i });
            };
            if component >= front.component_count() {
                return Err(HandlebodyError::SourceOutOfRange {
                    handle: i,
                    component,
                    count: front.component_count(),
                });
            }
            let tb = front.thurston_bennequin(component).expect("index checked");
            let rot = front.rotation_number(component).expect("index checked");
            if tb != h.tb {
                return Err(HandlebodyError::SourceMismatch {
                    handle: i,
                    field: "tb",
                    stored: h.tb,
                    computed: tb,
                });
            }
            if rot != h.rot {
                return Err(HandlebodyError::SourceMismatch {
                    handle: i,
                    field: "rot",
                    stored: h.rot,
                    computed: rot,
                });
            }
        }
        if let Some(m) = &linking {
            let n = handles.len();
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(HandlebodyError::BadLinkingMatrix { n });
            }
            for i in 0..n {
                for j in 0..n {
                    if m[i][j] != m[j][i] {
                        return Err(HandlebodyError::BadLinkingMatrix { n });
                    }
                }
            }
        }
        Ok(SteinHandlebody {
            handles,
            front,
            linking,
        })
    }

    /// Handles with bare invariants and no linking data.
    pub fn from_handles(handles: Vec<SteinHandle>) -> Result<Self, HandlebodyError> {
        Self::new_checked(handles, None, None)
    }

    /// Handles with an explicit symmetric linking matrix (diagonal ignored,
    /// normalized to zero).
    pub fn from_handles_with_linking(
        handles: Vec<SteinHandle>,
        mut linking: Vec<Vec<i64>>,
    ) -> Result<Self, HandlebodyError> {
        for (i, row) in linking.iter_mut().enumerate() {
            if let Some(e) = row.get_mut(i) {
                *e = 0;
            }
        }
        Self::new_checked(handles, None, Some(linking))
    }

    /// One 2-handle per component of the front, in component order.
    pub fn from_front(front: OrientedFront) -> Result<Self, HandlebodyError> {
        let handles = (0..front.component_count())
            .map(|c| SteinHandle {
                tb: front.thurston_bennequin(c).expect("component in range"),
                rot: front.rotation_number(c).expect("component in range"),
                source: Some(c),
            })
            .collect();
        Self::new_checked(handles, Some(front), None)
    }

    /// Synthesizes one stabilized-unknot handle per requested rotation
    /// number, with minimal stabilization count (tb = -1 - |rot|), realized
    /// by a shared front of pairwise unlinked components.
    pub fn from_rotations(rots: &[i64]) -> Result<Self, HandlebodyError> {
        if rots.is_empty() {
            return Err(HandlebodyError::Empty);
        }
        let mut diagram = FrontDiagram::empty();
        for &rot in rots {
            diagram = diagram.disjoint_union(&FrontDiagram::stabilized_unknot(rot));
        }
        let front = diagram.trace();
        let handlebody = Self::from_front(front)?;
        debug_assert!(handlebody
            .handles
            .iter()
            .all(SteinHandle::is_unknot_realizable));
        Ok(handlebody)
    }

    /// The deterministic model page for rotation divisor `r` and `b_2 = n`:
    /// rotations `(r, ..., r)` when `r` is odd or zero, `(r, 0, ..., 0)` when
    /// `r > 0` is even, so every handle's rotation has the parity of `r` and
    /// the gcd comes out to exactly `r`.
    pub fn canonical_model(r: i64, n: usize) -> Result<Self, HandlebodyError> {
        if r < 0 {
            return Err(HandlebodyError::NegativeDivisor { got: r });
        }
        if n == 0 {
            return Err(HandlebodyError::Empty);
        }
        let rots: Vec<i64> = if r % 2 == 1 {
            vec![r; n]
        } else if r == 0 {
            vec![0; n]
        } else {
            let mut v = vec![0; n];
            v[0] = r;
            v
        };
        Self::from_rotations(&rots)
    }

    pub fn handles(&self) -> &[SteinHandle] {
        &self.handles
    }

    pub fn b2(&self) -> usize {
        self.handles.len()
    }

    pub fn front(&self) -> Option<&OrientedFront> {
        self.front.as_ref()
    }

    /// The first Chern class as a cochain on the handle basis: the vector of
    /// rotation numbers in handle order.
    pub fn c1_cochain(&self) -> IntVector {
        IntVector::new(self.handles.iter().map(|h| h.rot).collect())
            .expect("handlebody has at least one handle")
    }

    /// Gcd of the absolute rotation numbers; zero when they all vanish.
    pub fn rotation_divisor(&self) -> i64 {
        self.c1_cochain().gcd_nonneg()
    }

    /// Boundary connected sum: handle lists concatenate, fronts (when both
    /// present) are drawn disjointly, and no new linking appears.
    pub fn boundary_connected_sum(&self, other: &SteinHandlebody) -> SteinHandlebody {
        let (front, shift) = match (&self.front, &other.front) {
            (Some(a), Some(b)) => (Some(a.disjoint_union(b)), a.component_count()),
            (Some(a), None) => (Some(a.clone()), 0),
            (None, b) => (b.clone(), 0),
        };
        let mut handles = self.handles.clone();
        handles.extend(other.handles.iter().map(|h| SteinHandle {
            source: h.source.map(|c| c + shift),
            ..*h
        }));
        let linking = match (self.linking_matrix(), other.linking_matrix()) {
            (Ok(a), Ok(b)) => Some(block_diagonal(&a, &b)),
            _ => None,
        };
        SteinHandlebody {
            handles,
            front,
            linking,
        }
    }

    /// Off-diagonal linking numbers of the attaching circles: the explicit
    /// matrix when present, otherwise computed from the shared front
    /// (requires every handle to carry a front source).
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>, HandlebodyError> {
        if let Some(m) = &self.linking {
            return Ok(m.clone());
        }
        let front = self.front.as_ref().ok_or(HandlebodyError::MissingLinking)?;
        let comps: Option<Vec<usize>> = self.handles.iter().map(|h| h.source).collect();
        let comps = comps.ok_or(HandlebodyError::MissingLinking)?;
        let n = self.handles.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let lk = front
                    .linking_number(comps[i], comps[j])
                    .expect("sources validated on construction");
                m[i][j] = lk;
                m[j][i] = lk;
            }
        }
        Ok(m)
    }

    /// Intersection form on `H_2`: framings (tb - 1) on the diagonal, linking
    /// numbers off it.
    pub fn intersection_form(&self) -> Result<Vec<Vec<i64>>, HandlebodyError> {
        let mut m = self.linking_matrix()?;
        for (i, h) in self.handles.iter().enumerate() {
            m[i][i] = h.framing();
        }
        Ok(m)
    }

    /// Reads a handlebody file; `front=` paths resolve relative to the file.
    pub fn load(path: &Path) -> Result<Self, HandlebodyError> {
        let text = fs::read_to_string(path).map_err(|source| HandlebodyError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::parse_with_base(&text, base)
    }

    /// Parses the handlebody format:
    ///
    /// ```text
    /// handle tb=<int> rot=<int>
    /// handle front=<path> component=<int>
    /// link <i> <j> <int>
    /// ```
    ///
    /// `#` starts a comment. Linking defaults to zero for unspecified pairs;
    /// pairs of front-sourced handles are computed from their fronts, and
    /// explicit `link` lines override everything.
    pub fn parse_with_base(text: &str, base: &Path) -> Result<Self, HandlebodyError> {
        let mut handles: Vec<SteinHandle> = Vec::new();
        let mut links: Vec<(usize, usize, i64)> = Vec::new();
        // Front files are loaded once and merged into one shared front in
        // first-reference order.
        let mut front: Option<OrientedFront> = None;
        let mut offsets: HashMap<String, (usize, usize)> = HashMap::new();

        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            match tokens[0] {
                "handle" => {
                    let fields = parse_fields(&tokens[1..], line_no)?;
                    handles.push(parse_handle(
                        fields,
                        line_no,
                        base,
                        &mut front,
                        &mut offsets,
                    )?);
                }
                "link" => {
                    if tokens.len() != 4 {
                        return Err(HandlebodyError::Syntax {
                            line: line_no,
                            message: "link lines are `link <i> <j> <int>`".into(),
                        });
                    }
                    let i = parse_number(tokens[1], line_no)?;
                    let j = parse_number(tokens[2], line_no)?;
                    let v: i64 = tokens[3].parse().map_err(|_| HandlebodyError::Syntax {
                        line: line_no,
                        message: format!("`{}` is not an integer", tokens[3]),
                    })?;
                    links.push((i, j, v));
                }
                other => {
                    return Err(HandlebodyError::Syntax {
                        line: line_no,
                        message: format!("unknown record `{other}` (expected handle or link)"),
                    })
                }
            }
        }

        if handles.is_empty() {
            return Err(HandlebodyError::Empty);
        }
        let n = handles.len();

        // Materialize the full linking matrix now so a loaded handlebody is
        // always a completely specified object.
        let mut m = vec![vec![0i64; n]; n];
        if let Some(front) = &front {
            for i in 0..n {
                for j in i + 1..n {
                    if let (Some(a), Some(b)) = (handles[i].source, handles[j].source) {
                        let lk = front.linking_number(a, b).map_err(|_| {
                            HandlebodyError::SourceOutOfRange {
                                handle: i,
                                component: a.max(b),
                                count: front.component_count(),
                            }
                        })?;
                        m[i][j] = lk;
                        m[j][i] = lk;
                    }
                }
            }
        }
        for (i, j, v) in links {
            if i >= n || j >= n || i == j {
                return Err(HandlebodyError::LinkOutOfRange { i, j, handles: n });
            }
            m[i][j] = v;
            m[j][i] = v;
        }
        Self::new_checked(handles, front, Some(m))
    }

    /// Serializes as explicit `handle tb= rot=` lines plus nonzero `link`
    /// lines. Front realizations are not embedded; writers that have them
    /// emit separate front files.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for h in &self.handles {
            writeln!(out, "handle tb={} rot={}", h.tb, h.rot).unwrap();
        }
        if let Ok(m) = self.linking_matrix() {
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    if m[i][j] != 0 {
                        writeln!(out, "link {i} {j} {}", m[i][j]).unwrap();
                    }
                }
            }
        }
        out
    }
}

fn block_diagonal(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (na, nb) = (a.len(), b.len());
    let mut m = vec![vec![0i64; na + nb]; na + nb];
    for i in 0..na {
        m[i][..na].copy_from_slice(&a[i]);
    }
    for i in 0..nb {
        m[na + i][na..].copy_from_slice(&b[i]);
    }
    m
}

fn parse_number(token: &str, line: usize) -> Result<usize, HandlebodyError> {
    token.parse().map_err(|_| HandlebodyError::Syntax {
        line,
        message: format!("`{token}` is not an index"),
    })
}

fn parse_fields<'a>(
    tokens: &[&'a str],
    line: usize,
) -> Result<Vec<(&'a str, &'a str)>, HandlebodyError> {
    tokens
        .iter()
        .map(|t| {
            t.split_once('=').ok_or_else(|| HandlebodyError::Syntax {
                line,
                message: format!("`{t}` is not a key=value field"),
            })
        })
        .collect()
}

fn parse_handle(
    fields: Vec<(&str, &str)>,
    line: usize,
    base: &Path,
    front: &mut Option<OrientedFront>,
    offsets: &mut HashMap<String, (usize, usize)>,
) -> Result<SteinHandle, HandlebodyError> {
    let mut tb = None;
    let mut rot = None;
    let mut front_path = None;
    let mut component = None;
    for (key, value) in fields {
        match key {
            "tb" => tb = Some(parse_i64(value, line)?),
            "rot" => rot = Some(parse_i64(value, line)?),
            "front" => front_path = Some(value.to_string()),
            "component" => component = Some(parse_number(value, line)?),
            other => {
                return Err(HandlebodyError::Syntax {
                    line,
                    message: format!("unknown handle field `{other}`"),
                })
            }
        }
    }
    match (tb, rot, front_path, component) {
        (Some(tb), Some(rot), None, None) => Ok(SteinHandle::new(tb, rot)),
        (None, None, Some(path), Some(component)) => {
            let resolved = base.join(&path);
            let (offset, count) = match offsets.get(&path) {
                Some(&pair) => pair,
                None => {
                    let text =
                        fs::read_to_string(&resolved).map_err(|source| HandlebodyError::Io {
                            path: resolved.clone(),
                            source,
                        })?;
                    let doc =
                        FrontDocument::parse(&text).map_err(|source| HandlebodyError::FrontFile {
                            path: resolved.clone(),
                            source,
                        })?;
                    let loaded =
                        doc.oriented()
                            .map_err(|source| HandlebodyError::FrontFile {
                                path: resolved.clone(),
                                source,
                            })?;
                    let offset = front.as_ref().map_or(0, OrientedFront::component_count);
                    let count = loaded.component_count();
                    *front = Some(match front.take() {
                        Some(existing) => existing.disjoint_union(&loaded),
                        None => loaded,
                    });
                    offsets.insert(path.clone(), (offset, count));
                    (offset, count)
                }
            };
            if component >= count {
                return Err(HandlebodyError::Syntax {
                    line,
                    message: format!(
                        "component {component} out of range: front `{path}` has {count} components"
                    ),
                });
            }
            let comp = offset + component;
            let f = front.as_ref().expect("front was just installed");
            Ok(SteinHandle {
                tb: f.thurston_bennequin(comp).expect("component in range"),
                rot: f.rotation_number(comp).expect("component in range"),
                source: Some(comp),
            })
        }
        _ => Err(HandlebodyError::Syntax {
            line,
            message: "handle needs either tb= and rot=, or front= and component=".into(),
        }),
    }
}

fn parse_i64(token: &str, line: usize) -> Result<i64, HandlebodyError> {
    token.parse().map_err(|_| HandlebodyError::Syntax {
        line,
        message: format!("`{token}` is not an integer"),
    })
}
