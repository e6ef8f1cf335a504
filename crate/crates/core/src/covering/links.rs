use super::YLink;
use crate::error::{Error, Result};
use crate::layering::Bipartite;

/// A Y-link family `F` together with its derived sets.
///
/// * `X_F`: link centers (`centers`).
/// * `Y_F = N(X_F)`: Y vertices with `center_count > 0`.
/// * `Y_{F,i}`: Y vertices with exactly `i` center neighbors.
/// * `X'_F`: non-center X vertices with a neighbor in `Y_{F,2+}` (`x_prime`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkFamilyState {
    pub links: Vec<YLink>,
    pub centers: Vec<bool>,
    pub center_count: Vec<usize>,
    pub x_prime: Vec<bool>,
    end_link: Vec<Option<usize>>,
    y_f_size: usize,
    x_prime_size: usize,
}

impl LinkFamilyState {
    /// Derives all sets from scratch. Returns `None` if the links are not
    /// vertex-disjoint paths of `g`.
    pub fn new(g: &Bipartite, links: Vec<YLink>) -> Option<Self> {
        let mut centers = vec![false; g.x_count()];
        let mut end_link = vec![None; g.y_count()];
        for (i, l) in links.iter().enumerate() {
            if l.y == l.y2 || l.edges(g).is_none() || centers[l.x] {
                return None;
            }
            centers[l.x] = true;
            for y in l.ends() {
                if end_link[y].replace(i).is_some() {
                    return None;
                }
            }
        }
        let mut center_count = vec![0usize; g.y_count()];
        for (x, _) in centers.iter().enumerate().filter(|(_, &c)| c) {
            for &(y, _) in g.x_neighbors(x) {
                center_count[y] += 1;
            }
        }
        let x_prime: Vec<bool> = (0..g.x_count())
            .map(|x| !centers[x] && g.x_neighbors(x).iter().any(|&(y, _)| center_count[y] >= 2))
            .collect();
        let y_f_size = center_count.iter().filter(|&&c| c > 0).count();
        let x_prime_size = x_prime.iter().filter(|&&b| b).count();
        Some(LinkFamilyState {
            links,
            centers,
            center_count,
            x_prime,
            end_link,
            y_f_size,
            x_prime_size,
        })
    }

    /// Lexicographic potential `(|Y_F|, |X'_F|)`.
    pub fn potential(&self) -> (usize, usize) {
        (self.y_f_size, self.x_prime_size)
    }

    pub fn in_y_f(&self, y: usize) -> bool {
        self.center_count[y] > 0
    }

    pub fn is_link_end(&self, y: usize) -> bool {
        self.end_link[y].is_some()
    }

    /// First `(y, x)` with `y ∉ Y_F` and `x ∈ N(y) − X'_F`.
    pub fn first_witness(&self, g: &Bipartite) -> Option<(usize, usize)> {
        (0..g.y_count()).filter(|&y| !self.in_y_f(y)).find_map(|y| {
            g.y_neighbors(y)
                .iter()
                .find(|&&(x, _)| !self.x_prime[x])
                .map(|&(x, _)| (y, x))
        })
    }

    fn witnesses<'a>(&'a self, g: &'a Bipartite) -> impl Iterator<Item = (usize, usize)> + 'a {
        (0..g.y_count())
            .filter(|&y| !self.in_y_f(y))
            .flat_map(move |y| {
                g.y_neighbors(y)
                    .iter()
                    .filter(|&&(x, _)| !self.x_prime[x])
                    .map(move |&(x, _)| (y, x))
            })
    }

    /// The link through `y`, oriented so that `y` comes first.
    fn oriented_link(&self, y: usize) -> Option<YLink> {
        let l = self.links[self.end_link[y]?];
        Some(if l.y == y {
            l
        } else {
            YLink::new(l.y2, l.x, l.y)
        })
    }
}

/// Grows a link family on a `(d, d+1)`-biregular graph until
/// `N(y) ⊆ X'_F` for every `y ∉ Y_F` and no link with a fresh center and
/// an end outside `Y_F` can be added.
///
/// Every accepted move strictly increases `(|Y_F|, |X'_F|)`. Moves are the
/// direct addition of a link and the rewirings along a Y-link sequence
/// `y_0x_0y'_0, y_1x_1y'_1, …` (with `y_{j+1} ∈ N(x_j)`) started from a
/// witness `(y, x)`:
///
/// * shift: `F − {links 0..=j} + {y_{l+1}x_ly'_l : l ≤ j} + {y_0xy}` when
///   `y_{j+1}` is not a link end;
/// * drop: `F − {links 0..=j} + {y'_lx_ly_{l+1} : l < j} + {yxy_0}`.
pub fn maximize_link_family(g: &Bipartite, d: usize) -> Result<LinkFamilyState> {
    if let Some(x) = (0..g.x_count()).find(|&x| g.x_degree(x) != d) {
        return Err(Error::InvalidParameters(format!(
            "X vertex {x} has degree {} != {d}",
            g.x_degree(x)
        )));
    }
    if let Some(y) = (0..g.y_count()).find(|&y| g.y_degree(y) != d + 1) {
        return Err(Error::InvalidParameters(format!(
            "Y vertex {y} has degree {} != {}",
            g.y_degree(y),
            d + 1
        )));
    }
    let mut state = LinkFamilyState::new(g, Vec::new()).expect("empty family");
    let budget = (g.x_count() + 1) * (g.y_count() + 1);
    for _ in 0..=budget {
        let next = add_link_move(g, &state).or_else(|| sequence_move(g, &state));
        match next {
            Some(links) => {
                let candidate = LinkFamilyState::new(g, links)
                    .ok_or_else(|| Error::internal("exchange produced overlapping links"))?;
                if candidate.potential() <= state.potential() {
                    return Err(Error::internal(format!(
                        "link exchange did not raise the potential ({:?} -> {:?})",
                        state.potential(),
                        candidate.potential()
                    )));
                }
                state = candidate;
            }
            None => {
                if let Some((y, x)) = state.first_witness(g) {
                    return Err(Error::internal(format!(
                        "no improving link exchange for witness y={y}, x={x}"
                    )));
                }
                return Ok(state);
            }
        }
    }
    Err(Error::internal(
        "link family search exceeded its move bound",
    ))
}

/// A non-center `x` with a neighbor outside `Y_F` and two neighbors that
/// are not link ends gets a new link.
fn add_link_move(g: &Bipartite, state: &LinkFamilyState) -> Option<Vec<YLink>> {
    for x in (0..g.x_count()).filter(|&x| !state.centers[x]) {
        let nbrs = g.x_neighbors(x);
        let Some(&(y, _)) = nbrs.iter().find(|&&(y, _)| !state.in_y_f(y)) else {
            continue;
        };
        // y ∉ Y_F, hence y is not a link end.
        if let Some(&(y0, _)) = nbrs.iter().find(|&&(w, _)| w != y && !state.is_link_end(w)) {
            let mut links = state.links.clone();
            links.push(YLink::new(y, x, y0));
            return Some(links);
        }
    }
    None
}

const SEQUENCE_NODE_BUDGET: usize = 20_000;

fn sequence_move(g: &Bipartite, state: &LinkFamilyState) -> Option<Vec<YLink>> {
    let current = state.potential();
    for (y, x) in state.witnesses(g) {
        let mut budget = SEQUENCE_NODE_BUDGET;
        for &(y0, _) in g.x_neighbors(x).iter().filter(|&&(w, _)| w != y) {
            let Some(first) = state.oriented_link(y0) else {
                continue;
            };
            let mut seq = vec![first];
            if let Some(links) = extend(g, state, current, y, x, &mut seq, &mut budget) {
                return Some(links);
            }
            if budget == 0 {
                break;
            }
        }
    }
    None
}

/// Depth-first walk over Y-link sequences; returns the first improving
/// rewiring found.
fn extend(
    g: &Bipartite,
    state: &LinkFamilyState,
    current: (usize, usize),
    y: usize,
    x: usize,
    seq: &mut Vec<YLink>,
    budget: &mut usize,
) -> Option<Vec<YLink>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let improves = |links: Vec<YLink>| {
        LinkFamilyState::new(g, links.clone())
            .filter(|s| s.potential() > current)
            .map(|_| links)
    };

    if let Some(links) = improves(drop_move(state, y, x, seq)) {
        return Some(links);
    }
    let last = *seq.last().expect("non-empty sequence");
    for &(next, _) in g.x_neighbors(last.x) {
        if next == last.y || next == last.y2 {
            continue;
        }
        match state.oriented_link(next) {
            None => {
                if let Some(links) = improves(shift_move(state, y, x, seq, next)) {
                    return Some(links);
                }
            }
            Some(link) => {
                if seq.iter().any(|l| l.x == link.x) {
                    continue;
                }
                seq.push(link);
                let found = extend(g, state, current, y, x, seq, budget);
                seq.pop();
                if found.is_some() || *budget == 0 {
                    return found;
                }
            }
        }
    }
    None
}

fn without_sequence(state: &LinkFamilyState, seq: &[YLink]) -> Vec<YLink> {
    state
        .links
        .iter()
        .filter(|l| !seq.iter().any(|s| s.x == l.x))
        .copied()
        .collect()
}

/// `F − {links 0..=j} + {y_{l+1}x_ly'_l : l ≤ j} + {y_0xy}` with `y_{j+1} = next`.
fn shift_move(
    state: &LinkFamilyState,
    y: usize,
    x: usize,
    seq: &[YLink],
    next: usize,
) -> Vec<YLink> {
    let mut links = without_sequence(state, seq);
    for (l, link) in seq.iter().enumerate() {
        let succ = seq.get(l + 1).map_or(next, |s| s.y);
        links.push(YLink::new(succ, link.x, link.y2));
    }
    links.push(YLink::new(seq[0].y, x, y));
    links
}

/// `F − {links 0..=j} + {y'_lx_ly_{l+1} : l < j} + {yxy_0}`; the last
/// link's center is released.
fn drop_move(state: &LinkFamilyState, y: usize, x: usize, seq: &[YLink]) -> Vec<YLink> {
    let mut links = without_sequence(state, seq);
    for l in 0..seq.len() - 1 {
        links.push(YLink::new(seq[l].y2, seq[l].x, seq[l + 1].y));
    }
    links.push(YLink::new(y, x, seq[0].y));
    links
}
