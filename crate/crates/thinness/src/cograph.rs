//! Cographs given as cotree expressions: thinness and precedence thinness
//! by recursion over union/join, with witness layouts synthesized by
//! concatenating and merging the children's layouts.

use crate::graph::Graph;
use crate::layout::Layout;

/// Expression tree over single vertices: internal nodes are unions or joins
/// with at least two children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CotreeExpr {
    Leaf,
    Union(Vec<CotreeExpr>),
    Join(Vec<CotreeExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<CotreeExpr, ParseError> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(CotreeExpr::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let first = self.expr()?;
                let op = match self.peek() {
                    Some(c @ (b'+' | b'*')) => c,
                    Some(b')') => return Err(self.err("expected an operator before ')'")),
                    _ => return Err(self.err("expected '+' or '*'")),
                };
                let mut children = vec![first];
                loop {
                    match self.peek() {
                        Some(c @ (b'+' | b'*')) if c == op => {
                            self.pos += 1;
                            children.push(self.expr()?);
                        }
                        Some(b'+') | Some(b'*') => {
                            return Err(self.err("mixed operators at one level"));
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(_) => return Err(self.err("expected an operator or ')'")),
                        None => return Err(self.err("unexpected end of input")),
                    }
                }
                Ok(if op == b'+' {
                    CotreeExpr::Union(children)
                } else {
                    CotreeExpr::Join(children)
                })
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Grammar: `expr := '1' | '(' expr (op expr)+ ')'` with op one of `+`
/// (union) and `*` (join); mixing the two at one level is rejected.
pub fn parse_cotree(text: &str) -> Result<CotreeExpr, ParseError> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

impl CotreeExpr {
    pub fn leaf_count(&self) -> usize {
        match self {
            CotreeExpr::Leaf => 1,
            CotreeExpr::Union(cs) | CotreeExpr::Join(cs) => cs.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    /// The cograph this expression denotes; leaves are numbered left to
    /// right, which matches folding the children through the graph
    /// union/join operators.
    pub fn evaluate(&self) -> Graph {
        match self {
            CotreeExpr::Leaf => Graph::new(1),
            CotreeExpr::Union(cs) => cs
                .iter()
                .map(|c| c.evaluate())
                .reduce(|a, b| a.union(&b))
                .unwrap(),
            CotreeExpr::Join(cs) => cs
                .iter()
                .map(|c| c.evaluate())
                .reduce(|a, b| a.join(&b))
                .unwrap(),
        }
    }

    /// Structural completeness test: a leaf is complete, a join is complete
    /// when all children are, and a union of two or more nonempty graphs
    /// never is. Agrees with checking the edge count of `evaluate()`.
    pub fn is_complete(&self) -> bool {
        match self {
            CotreeExpr::Leaf => true,
            CotreeExpr::Union(_) => false,
            CotreeExpr::Join(cs) => cs.iter().all(|c| c.is_complete()),
        }
    }
}

/// thin of the expression's graph: 1 at a leaf, max over a union, and over
/// a join the sum over non-complete children (complete children merge for
/// free; 1 if everything is complete).
pub fn thin_cograph(e: &CotreeExpr) -> usize {
    match e {
        CotreeExpr::Leaf => 1,
        CotreeExpr::Union(cs) => cs.iter().map(thin_cograph).max().unwrap(),
        CotreeExpr::Join(cs) => {
            let sum: usize = cs
                .iter()
                .filter(|c| !c.is_complete())
                .map(thin_cograph)
                .sum();
            sum.max(1)
        }
    }
}

/// fp of the expression's graph: 1 at a leaf, sum minus (t-1) over a union
/// of t children, and the same complete-child rule as `thin_cograph` over
/// a join.
pub fn fp_cograph(e: &CotreeExpr) -> usize {
    match e {
        CotreeExpr::Leaf => 1,
        CotreeExpr::Union(cs) => {
            let sum: usize = cs.iter().map(fp_cograph).sum();
            sum - (cs.len() - 1)
        }
        CotreeExpr::Join(cs) => {
            let sum: usize = cs.iter().filter(|c| !c.is_complete()).map(fp_cograph).sum();
            sum.max(1)
        }
    }
}

struct Piece {
    order: Vec<usize>,
    classes: Vec<Vec<usize>>,
    complete: bool,
}

fn build_piece(e: &CotreeExpr, next_id: &mut usize, precedence: bool) -> Piece {
    match e {
        CotreeExpr::Leaf => {
            let id = *next_id;
            *next_id += 1;
            Piece {
                order: vec![id],
                classes: vec![vec![id]],
                complete: true,
            }
        }
        CotreeExpr::Union(cs) => {
            let pieces: Vec<Piece> = cs.iter().map(|c| build_piece(c, next_id, precedence)).collect();
            let mut it = pieces.into_iter();
            let mut acc = it.next().unwrap();
            for p in it {
                acc.order.extend(p.order);
                if precedence {
                    // glue the last class of the accumulator to the first
                    // class of the next component
                    let mut rest = p.classes.into_iter();
                    acc.classes.last_mut().unwrap().extend(rest.next().unwrap());
                    acc.classes.extend(rest);
                } else {
                    // class labels are shared across components
                    for (i, class) in p.classes.into_iter().enumerate() {
                        if i < acc.classes.len() {
                            acc.classes[i].extend(class);
                        } else {
                            acc.classes.push(class);
                        }
                    }
                }
            }
            acc.complete = false;
            acc
        }
        CotreeExpr::Join(cs) => {
            let pieces: Vec<Piece> = cs.iter().map(|c| build_piece(c, next_id, precedence)).collect();
            let (incomplete, complete): (Vec<Piece>, Vec<Piece>) =
                pieces.into_iter().partition(|p| !p.complete);
            if incomplete.is_empty() {
                // join of completes is complete: one class, concatenated order
                let order: Vec<usize> = complete.iter().flat_map(|p| p.order.iter().copied()).collect();
                return Piece {
                    classes: vec![order.clone()],
                    order,
                    complete: true,
                };
            }
            let mut it = incomplete.into_iter();
            let mut acc = it.next().unwrap();
            for p in it {
                acc.order.extend(p.order);
                acc.classes.extend(p.classes);
            }
            // complete children fold last, each merging into the last class
            for p in complete {
                acc.order.extend(p.order.iter().copied());
                acc.classes.last_mut().unwrap().extend(p.order);
            }
            acc.complete = false;
            acc
        }
    }
}

/// Layout over `evaluate(e)` that verifies as thin with `thin_cograph(e)`
/// classes.
pub fn witness_thin(e: &CotreeExpr) -> Layout {
    let mut next = 0;
    let p = build_piece(e, &mut next, false);
    Layout::new(p.order, p.classes)
}

/// Layout over `evaluate(e)` that verifies as precedence thin with
/// `fp_cograph(e)` classes.
pub fn witness_fp(e: &CotreeExpr) -> Layout {
    let mut next = 0;
    let p = build_piece(e, &mut next, true);
    Layout::new(p.order, p.classes)
}
