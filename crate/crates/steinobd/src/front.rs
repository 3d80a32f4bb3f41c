//! Legendrian link front diagrams encoded as column words of events.
//!
//! A front is read left to right as a word of events, one event per column.
//! Between events the diagram consists of `k` horizontal strands, numbered
//! `1..=k` from top to bottom:
//!
//! * `L<i>` — a left cusp opening two new strands at positions `i`, `i+1`
//!   (legal for `1 <= i <= k+1`);
//! * `R<i>` — a right cusp closing the strands at positions `i`, `i+1`
//!   (legal for `1 <= i <= k-1`);
//! * `X<i>` — a crossing exchanging the strands at positions `i`, `i+1`
//!   (legal for `1 <= i <= k-1`).
//!
//! A closed front starts and ends with zero strands. Crossings are resolved
//! by the slope convention: the strand descending left to right (entering at
//! position `i`, leaving at position `i+1`) always passes over the ascending
//! one. With that convention the sign of a crossing depends only on the
//! traversal directions of the two strands:
//!
//! | over strand (descending) | under strand (ascending) | sign |
//! |--------------------------|--------------------------|------|
//! | rightward                | rightward                | `+1` |
//! | rightward                | leftward                 | `-1` |
//! | leftward                 | rightward                | `-1` |
//! | leftward                 | leftward                 | `+1` |
//!
//! The tangent of the over strand is `(+1, -1)` when traversed rightward and
//! `(-1, +1)` leftward; the under strand has tangent `(+1, +1)` rightward and
//! `(-1, -1)` leftward. The sign is `+1` exactly when the ordered pair
//! (over tangent, under tangent) is a positively oriented basis of the plane,
//! which reduces to the table above.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Kind of a single front-diagram event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    LeftCusp,
    RightCusp,
    Crossing,
}

impl EventKind {
    fn letter(self) -> char {
        match self {
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
            EventKind::Crossing => 'X',
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EventKind::LeftCusp => "left cusp",
            EventKind::RightCusp => "right cusp",
            EventKind::Crossing => "crossing",
        };
        f.write_str(name)
    }
}

/// One event at a 1-based strand position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrontEvent {
    pub kind: EventKind,
    pub position: usize,
}

impl FrontEvent {
    pub fn left(position: usize) -> Self {
        FrontEvent {
            kind: EventKind::LeftCusp,
            position,
        }
    }

    pub fn right(position: usize) -> Self {
        FrontEvent {
            kind: EventKind::RightCusp,
            position,
        }
    }

    pub fn crossing(position: usize) -> Self {
        FrontEvent {
            kind: EventKind::Crossing,
            position,
        }
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.position)
    }
}

/// Line/column of a token in a front-word document (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrontError {
    #[error("{location}: {message}")]
    Syntax { location: Location, message: String },
    #[error("{}event {event_index}: {kind} at position {position} is illegal with {strands} strands", prefix(.location))]
    IllegalPosition {
        event_index: usize,
        kind: EventKind,
        position: usize,
        strands: usize,
        location: Option<Location>,
    },
    #[error("front is not closed: {left_cusps} left cusps vs {right_cusps} right cusps leave {final_strands} strands open")]
    OpenFront {
        left_cusps: usize,
        right_cusps: usize,
        final_strands: usize,
    },
    #[error("component index {index} out of range (front has {count} components)")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("linking number requires two distinct components, got {index} twice")]
    SameComponent { index: usize },
}

fn prefix(loc: &Option<Location>) -> String {
    match loc {
        Some(l) => format!("{l}: "),
        None => String::new(),
    }
}

/// A validated closed front diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontDiagram {
    events: Vec<FrontEvent>,
}

impl FrontDiagram {
    /// Validates the event word: every position in bounds and the front
    /// closed. The empty diagram is valid.
    pub fn new(events: Vec<FrontEvent>) -> Result<Self, FrontError> {
        replay(&events)?;
        Ok(FrontDiagram { events })
    }

    pub fn empty() -> Self {
        FrontDiagram { events: Vec::new() }
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    /// Parses a front word, ignoring `orient` directives. Use
    /// [`FrontDocument::parse`] to retain them.
    pub fn parse(text: &str) -> Result<Self, FrontError> {
        Ok(FrontDocument::parse(text)?.diagram)
    }

    /// Disjoint union: the other front is drawn after this one closes, so
    /// components and invariants simply concatenate.
    pub fn disjoint_union(&self, other: &FrontDiagram) -> FrontDiagram {
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        FrontDiagram { events }
    }

    /// The front of a Legendrian unknot stabilized `|rot|` times, with the
    /// sign of `rot` choosing the zigzag side. Produces tb `-1 - |rot|` and
    /// rotation number `rot`; identical to iterating [`OrientedFront::stabilize`]
    /// on the standard unknot `L1 R1`.
    pub fn stabilized_unknot(rot: i64) -> FrontDiagram {
        let mut events = vec![FrontEvent::left(1)];
        for _ in 0..rot.unsigned_abs() {
            if rot > 0 {
                events.push(FrontEvent::left(2));
                events.push(FrontEvent::right(1));
            } else {
                events.push(FrontEvent::left(1));
                events.push(FrontEvent::right(2));
            }
        }
        events.push(FrontEvent::right(1));
        FrontDiagram { events }
    }

    pub fn trace(&self) -> OrientedFront {
        OrientedFront::trace(self.clone())
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, ev) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{ev}")?;
        }
        Ok(())
    }
}

/// A parsed front-word file: the diagram plus any `orient <component>
/// reversed` directives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontDocument {
    pub diagram: FrontDiagram,
    pub reversed: Vec<usize>,
}

impl FrontDocument {
    pub fn parse(text: &str) -> Result<Self, FrontError> {
        let mut events = Vec::new();
        let mut locations = Vec::new();
        let mut reversed = Vec::new();

        for (line_idx, raw_line) in text.lines().enumerate() {
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            let tokens: Vec<(usize, &str)> = split_tokens(line);
            if tokens.is_empty() {
                continue;
            }
            if tokens[0].1 == "orient" {
                parse_orient(&tokens, line_idx + 1, &mut reversed)?;
                continue;
            }
            for &(col, tok) in &tokens {
                let location = Location {
                    line: line_idx + 1,
                    column: col + 1,
                };
                events.push(parse_event(tok, location)?);
                locations.push(location);
            }
        }

        let diagram = match replay(&events) {
            Ok(_) => FrontDiagram { events },
            Err(FrontError::IllegalPosition {
                event_index,
                kind,
                position,
                strands,
                ..
            }) => {
                return Err(FrontError::IllegalPosition {
                    event_index,
                    kind,
                    position,
                    strands,
                    location: Some(locations[event_index]),
                })
            }
            Err(e) => return Err(e),
        };
        Ok(FrontDocument { diagram, reversed })
    }

    /// Traces the diagram and applies the orientation directives. Component
    /// indices in directives are checked against the traced front.
    pub fn oriented(&self) -> Result<OrientedFront, FrontError> {
        let mut front = self.diagram.trace();
        for &comp in &self.reversed {
            front = front.with_orientation(comp, Orientation::Reversed)?;
        }
        Ok(front)
    }
}

impl fmt::Display for FrontDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.diagram)?;
        for comp in &self.reversed {
            writeln!(f, "orient {comp} reversed")?;
        }
        Ok(())
    }
}

fn split_tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

fn parse_event(token: &str, location: Location) -> Result<FrontEvent, FrontError> {
    let kind = match token.chars().next() {
        Some('L') => EventKind::LeftCusp,
        Some('R') => EventKind::RightCusp,
        Some('X') => EventKind::Crossing,
        _ => {
            return Err(FrontError::Syntax {
                location,
                message: format!("unrecognized token `{token}` (expected L<n>, R<n> or X<n>)"),
            })
        }
    };
    let digits = &token[1..];
    let position: usize = digits.parse().map_err(|_| FrontError::Syntax {
        location,
        message: format!("token `{token}` needs a numeric position"),
    })?;
    if position == 0 {
        return Err(FrontError::Syntax {
            location,
            message: format!("token `{token}`: positions are 1-based"),
        });
    }
    Ok(FrontEvent { kind, position })
}

fn parse_orient(
    tokens: &[(usize, &str)],
    line: usize,
    reversed: &mut Vec<usize>,
) -> Result<(), FrontError> {
    let location = Location {
        line,
        column: tokens[0].0 + 1,
    };
    if tokens.len() != 3 || tokens[2].1 != "reversed" {
        return Err(FrontError::Syntax {
            location,
            message: "orient directive must be `orient <component> reversed`".into(),
        });
    }
    let comp: usize = tokens[1].1.parse().map_err(|_| FrontError::Syntax {
        location: Location {
            line,
            column: tokens[1].0 + 1,
        },
        message: format!("`{}` is not a component index", tokens[1].1),
    })?;
    reversed.push(comp);
    Ok(())
}

type ArcId = usize;

/// A maximal strand arc between its birth (left) cusp and death (right) cusp.
#[derive(Debug, Clone, Copy)]
struct Arc {
    birth_event: usize,
    birth_position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CuspSide {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy)]
struct Cusp {
    side: CuspSide,
    upper: ArcId,
    lower: ArcId,
}

#[derive(Debug, Clone, Copy)]
struct Crossing {
    /// Arc entering at position `i`: descends through the crossing, over.
    over: ArcId,
    /// Arc entering at position `i+1`: ascends through the crossing, under.
    under: ArcId,
}

#[derive(Debug, Clone, Default)]
struct Replay {
    arcs: Vec<Arc>,
    cusps: Vec<Cusp>,
    crossings: Vec<Crossing>,
}

/// Replays the event word, checking legality and building the arc/cusp/crossing
/// record. Positions are validated against the running strand count, which
/// therefore can never go negative.
fn replay(events: &[FrontEvent]) -> Result<Replay, FrontError> {
    let mut strands: Vec<ArcId> = Vec::new();
    let mut rec = Replay::default();
    rec.arcs.reserve(events.len());
    rec.cusps.reserve(events.len());
    let mut left_cusps = 0usize;
    let mut right_cusps = 0usize;

    for (index, ev) in events.iter().enumerate() {
        let k = strands.len();
        let illegal = |kind| FrontError::IllegalPosition {
            event_index: index,
            kind,
            position: ev.position,
            strands: k,
            location: None,
        };
        match ev.kind {
            EventKind::LeftCusp => {
                if ev.position < 1 || ev.position > k + 1 {
                    return Err(illegal(ev.kind));
                }
                let upper = rec.arcs.len();
                rec.arcs.push(Arc {
                    birth_event: index,
                    birth_position: ev.position,
                });
                let lower = rec.arcs.len();
                rec.arcs.push(Arc {
                    birth_event: index,
                    birth_position: ev.position + 1,
                });
                strands.insert(ev.position - 1, lower);
                strands.insert(ev.position - 1, upper);
                rec.cusps.push(Cusp {
                    side: CuspSide::Left,
                    upper,
                    lower,
                });
                left_cusps += 1;
            }
            EventKind::RightCusp => {
                if ev.position < 1 || ev.position + 1 > k {
                    return Err(illegal(ev.kind));
                }
                let upper = strands.remove(ev.position - 1);
                let lower = strands.remove(ev.position - 1);
                rec.cusps.push(Cusp {
                    side: CuspSide::Right,
                    upper,
                    lower,
                });
                right_cusps += 1;
            }
            EventKind::Crossing => {
                if ev.position < 1 || ev.position + 1 > k {
                    return Err(illegal(ev.kind));
                }
                let over = strands[ev.position - 1];
                let under = strands[ev.position];
                rec.crossings.push(Crossing { over, under });
                strands.swap(ev.position - 1, ev.position);
            }
        }
    }

    if !strands.is_empty() {
        return Err(FrontError::OpenFront {
            left_cusps,
            right_cusps,
            final_strands: strands.len(),
        });
    }
    Ok(rec)
}

/// Traversal direction of an arc along the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    Rightward,
    Leftward,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Rightward => Dir::Leftward,
            Dir::Leftward => Dir::Rightward,
        }
    }
}

/// Per-component traversal orientation relative to the deterministic default
/// (earliest-created strand of the component runs rightward).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    AsDefault,
    Reversed,
}

/// Sign of a crossing from the traversal directions of its strands, per the
/// table in the module docs: `+1` when both run the same way, `-1` otherwise.
fn sign_from_directions(over: Dir, under: Dir) -> i64 {
    if over == under {
        1
    } else {
        -1
    }
}

/// Classical invariants of every component of an oriented front.
///
/// The linking matrix is symmetric with zero diagonal; self-framing data
/// lives with the handle layer, not here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalInvariants {
    pub tb: Vec<i64>,
    pub rot: Vec<i64>,
    pub writhe: Vec<i64>,
    pub linking: Vec<Vec<i64>>,
}

/// A front diagram with components traced and oriented.
///
/// Per-component aggregates are accumulated once while tracing; orientation
/// reversals only flip signs, so queries never rescan the events.
#[derive(Debug, Clone)]
pub struct OrientedFront {
    diagram: FrontDiagram,
    replay: Replay,
    components: Vec<Vec<ArcId>>,
    comp_of: Vec<usize>,
    base_dir: Vec<Dir>,
    orientation: Vec<Orientation>,
    right_cusps: Vec<i64>,
    self_writhe: Vec<i64>,
    /// Rotation number of each component under the default orientation.
    base_rot: Vec<i64>,
    /// Summed crossing signs between component pairs (i < j), default
    /// orientations; the linking number is half of this.
    base_linking: HashMap<(usize, usize), i64>,
}

impl OrientedFront {
    /// Follows strands through the events: each cusp joins its two arcs, each
    /// crossing preserves arc identity. Components are indexed by the birth
    /// order of their earliest arc.
    pub fn trace(diagram: FrontDiagram) -> OrientedFront {
        let replay = replay(&diagram.events).expect("FrontDiagram is validated on construction");
        let n = replay.arcs.len();

        let mut uf = UnionFind::new(n);
        for cusp in &replay.cusps {
            uf.union(cusp.upper, cusp.lower);
        }

        // Arc ids are allocated in birth order (upper before lower), so the
        // anchor of each component is simply its minimal arc id.
        let mut comp_index: Vec<Option<usize>> = vec![None; n];
        let mut components: Vec<Vec<ArcId>> = Vec::new();
        let mut comp_of = vec![0usize; n];
        for arc in 0..n {
            let root = uf.find(arc);
            let idx = *comp_index[root].get_or_insert_with(|| {
                components.push(Vec::new());
                components.len() - 1
            });
            components[idx].push(arc);
            comp_of[arc] = idx;
        }

        // Propagate traversal directions: the anchor runs rightward and the
        // direction flips across every cusp. Every arc meets exactly two
        // cusps (its birth and its death), so the adjacency fits flat arrays.
        let mut partners = vec![[usize::MAX; 2]; n];
        let mut attach = |arc: usize, other: usize, partners: &mut Vec<[usize; 2]>| {
            let slot = usize::from(partners[arc][0] != usize::MAX);
            partners[arc][slot] = other;
        };
        for cusp in &replay.cusps {
            attach(cusp.upper, cusp.lower, &mut partners);
            attach(cusp.lower, cusp.upper, &mut partners);
        }
        let mut base_dir = vec![Dir::Rightward; n];
        let mut seen = vec![false; n];
        let mut stack: Vec<ArcId> = Vec::new();
        for comp in &components {
            let anchor = comp[0];
            seen[anchor] = true;
            stack.push(anchor);
            while let Some(arc) = stack.pop() {
                for &next in &partners[arc] {
                    if next != usize::MAX && !seen[next] {
                        seen[next] = true;
                        base_dir[next] = base_dir[arc].flip();
                        stack.push(next);
                    }
                }
            }
        }

        let c = components.len();
        let mut right_cusps = vec![0i64; c];
        let mut down = vec![0i64; c];
        let mut up = vec![0i64; c];
        for cusp in &replay.cusps {
            let comp = comp_of[cusp.upper];
            // At a left cusp the traversal exits along whichever arc runs
            // rightward; it climbs through the cusp exactly when that is the
            // upper arc. At a right cusp the roles mirror.
            let upper_rightward = base_dir[cusp.upper] == Dir::Rightward;
            let upward = match cusp.side {
                CuspSide::Left => upper_rightward,
                CuspSide::Right => {
                    right_cusps[comp] += 1;
                    !upper_rightward
                }
            };
            if upward {
                up[comp] += 1;
            } else {
                down[comp] += 1;
            }
        }
        let base_rot = (0..c)
            .map(|i| {
                debug_assert_eq!((down[i] - up[i]) % 2, 0);
                (down[i] - up[i]) / 2
            })
            .collect();

        let mut self_writhe = vec![0i64; c];
        let mut base_linking: HashMap<(usize, usize), i64> = HashMap::new();
        for crossing in &replay.crossings {
            let (i, j) = (comp_of[crossing.over], comp_of[crossing.under]);
            let sign = sign_from_directions(base_dir[crossing.over], base_dir[crossing.under]);
            if i == j {
                self_writhe[i] += sign;
            } else {
                *base_linking.entry((i.min(j), i.max(j))).or_default() += sign;
            }
        }

        let orientation = vec![Orientation::AsDefault; c];
        OrientedFront {
            diagram,
            replay,
            components,
            comp_of,
            base_dir,
            orientation,
            right_cusps,
            self_writhe,
            base_rot,
            base_linking,
        }
    }

    pub fn diagram(&self) -> &FrontDiagram {
        &self.diagram
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn orientation(&self, component: usize) -> Result<Orientation, FrontError> {
        self.check_component(component)?;
        Ok(self.orientation[component])
    }

    /// Returns a copy with the given component's orientation set.
    pub fn with_orientation(
        mut self,
        component: usize,
        orientation: Orientation,
    ) -> Result<OrientedFront, FrontError> {
        self.check_component(component)?;
        self.orientation[component] = orientation;
        Ok(self)
    }

    fn check_component(&self, component: usize) -> Result<(), FrontError> {
        if component >= self.components.len() {
            return Err(FrontError::ComponentOutOfRange {
                index: component,
                count: self.components.len(),
            });
        }
        Ok(())
    }

    fn dir(&self, arc: ArcId) -> Dir {
        match self.orientation[self.comp_of[arc]] {
            Orientation::AsDefault => self.base_dir[arc],
            Orientation::Reversed => self.base_dir[arc].flip(),
        }
    }

    /// Thurston-Bennequin number: self-writhe minus the number of right cusps
    /// of the component. Orientation-independent.
    pub fn thurston_bennequin(&self, component: usize) -> Result<i64, FrontError> {
        self.check_component(component)?;
        Ok(self.self_writhe[component] - self.right_cusps[component])
    }

    /// Signed count of self-crossings of the component. Reversing the
    /// component flips both strands of each self-crossing, so the sign and
    /// hence the writhe are orientation-independent.
    pub fn writhe(&self, component: usize) -> Result<i64, FrontError> {
        self.check_component(component)?;
        Ok(self.self_writhe[component])
    }

    /// Rotation number: half the difference of downward and upward cusp
    /// traversals. Reversing the component's orientation negates it.
    pub fn rotation_number(&self, component: usize) -> Result<i64, FrontError> {
        self.check_component(component)?;
        Ok(match self.orientation[component] {
            Orientation::AsDefault => self.base_rot[component],
            Orientation::Reversed => -self.base_rot[component],
        })
    }

    /// Half the signed count of crossings between two distinct components.
    /// Reversing exactly one of the two components negates it.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, FrontError> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Err(FrontError::SameComponent { index: i });
        }
        let total = self
            .base_linking
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(0);
        debug_assert_eq!(total % 2, 0, "two closed curves cross an even number of times");
        let flip = (self.orientation[i] == Orientation::Reversed)
            != (self.orientation[j] == Orientation::Reversed);
        Ok(if flip { -total / 2 } else { total / 2 })
    }

    /// All classical invariants at once; linking diagonal is left at zero.
    pub fn invariants(&self) -> ClassicalInvariants {
        let c = self.component_count();
        let tb = (0..c).map(|i| self.thurston_bennequin(i).unwrap()).collect();
        let rot = (0..c).map(|i| self.rotation_number(i).unwrap()).collect();
        let writhe = (0..c).map(|i| self.writhe(i).unwrap()).collect();
        let mut linking = vec![vec![0i64; c]; c];
        for i in 0..c {
            for j in i + 1..c {
                let lk = self.linking_number(i, j).unwrap();
                linking[i][j] = lk;
                linking[j][i] = lk;
            }
        }
        ClassicalInvariants {
            tb,
            rot,
            writhe,
            linking,
        }
    }

    /// Disjoint union of two oriented fronts: the second diagram is drawn
    /// after the first closes. Components concatenate in order and keep their
    /// orientations.
    pub fn disjoint_union(&self, other: &OrientedFront) -> OrientedFront {
        let diagram = self.diagram.disjoint_union(&other.diagram);
        let mut front = diagram.trace();
        debug_assert_eq!(
            front.component_count(),
            self.component_count() + other.component_count()
        );
        for (slot, o) in front
            .orientation
            .iter_mut()
            .zip(self.orientation.iter().chain(&other.orientation))
        {
            *slot = *o;
        }
        front
    }

    /// Adds a zigzag to the component right after its anchor arc is born.
    /// Decreases tb by 1 and shifts rot by the requested sign; the smooth knot
    /// type is unchanged (not checked). Component indexing and the
    /// orientations of all components are preserved.
    pub fn stabilize(&self, component: usize, sign: StabSign) -> Result<OrientedFront, FrontError> {
        self.check_component(component)?;
        let anchor = self.components[component][0];
        let arc = self.replay.arcs[anchor];
        let p = arc.birth_position;

        // With the anchor running rightward, a zigzag below the strand is the
        // positive stabilization and one above is negative; a reversed
        // component swaps the sides.
        let rightward = self.dir(anchor) == Dir::Rightward;
        let below = match sign {
            StabSign::Positive => rightward,
            StabSign::Negative => !rightward,
        };
        let insert = if below {
            [FrontEvent::left(p + 1), FrontEvent::right(p)]
        } else {
            [FrontEvent::left(p), FrontEvent::right(p + 1)]
        };

        let mut events = self.diagram.events.clone();
        events.splice(arc.birth_event + 1..arc.birth_event + 1, insert);
        let diagram = FrontDiagram::new(events)?;
        let mut front = diagram.trace();
        debug_assert_eq!(front.component_count(), self.component_count());
        front.orientation.copy_from_slice(&self.orientation);
        Ok(front)
    }
}

/// Zigzag side for a stabilization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabSign {
    Positive,
    Negative,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
