//! Terminal game against the engine.

use std::io::{self, BufRead, Write};

use influence_core::{GraphDoc, MoveMode, Position, Side, SolveOptions, Solver};

fn name(side: Side) -> &'static str {
    match side {
        Side::Left => "Left",
        Side::Right => "Right",
    }
}

/// Plays one game on `doc` with the full capture rule. The engine answers
/// with the solver's best move; the human types vertex ids as written in
/// the file. Returns the final `(left, right)` scores.
pub fn run<I: BufRead, O: Write>(
    doc: &GraphDoc,
    human: Side,
    first: Side,
    input: &mut I,
    out: &mut O,
) -> io::Result<(usize, usize)> {
    let g = &doc.graph;
    let engine = Solver::new(g, SolveOptions::raw());
    let mut p = Position::initial(g);
    let mut score = [0usize; 2];
    let mut turn = first;
    let idx = |s: Side| if s == Side::Left { 0 } else { 1 };

    if p.alive().is_empty() {
        writeln!(out, "game over: the graph is empty")?;
    }
    while !p.alive().is_empty() {
        let moves = p.alive_of(turn);
        if moves.is_empty() {
            writeln!(out, "{} has no vertex left and waits", name(turn))?;
            turn = turn.opponent();
            continue;
        }
        let v = if turn == human {
            let ids: Vec<String> = moves.iter().map(|v| doc.ids[v].to_string()).collect();
            match read_move(doc, &p, turn, &ids, input, out)? {
                Some(v) => v,
                None => {
                    writeln!(out, "input closed; game abandoned")?;
                    return Ok((score[0], score[1]));
                }
            }
        } else {
            let b = engine.best_move(&p, turn).expect("mover has a vertex");
            writeln!(out, "engine ({}) plays {}", turn.letter(), doc.ids[b.vertex])?;
            b.vertex
        };
        let taken = p.removal(turn, v, MoveMode::Raw).expect("legal move");
        let mut ids: Vec<u64> = taken.vertices.iter().map(|u| doc.ids[u]).collect();
        ids.sort_unstable();
        score[idx(turn)] += taken.len();
        writeln!(out, "{} takes {ids:?}; score L {} - R {}", name(turn), score[0], score[1])?;
        p = p.apply_move(turn, v, MoveMode::Raw).expect("legal move");
        turn = turn.opponent();
    }

    let (l, r) = (score[0], score[1]);
    let verdict = match l.cmp(&r) {
        std::cmp::Ordering::Greater => "Left wins",
        std::cmp::Ordering::Less => "Right wins",
        std::cmp::Ordering::Equal => "draw",
    };
    writeln!(out, "final score L {l} - R {r}: {verdict}")?;
    Ok((l, r))
}

fn read_move<I: BufRead, O: Write>(
    doc: &GraphDoc,
    p: &Position<'_>,
    side: Side,
    ids: &[String],
    input: &mut I,
    out: &mut O,
) -> io::Result<Option<usize>> {
    loop {
        write!(out, "{} to move, choose one of [{}]: ", name(side), ids.join(" "))?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(None);
        }
        let text = line.trim();
        let vertex = text
            .parse::<u64>()
            .ok()
            .and_then(|id| doc.ids.iter().position(|&x| x == id));
        match vertex {
            Some(v) if p.is_alive(v) && doc.graph.color(v) == side => return Ok(Some(v)),
            Some(_) => writeln!(out, "{text} is not one of your vertices")?,
            None => writeln!(out, "{text:?} is not a vertex id")?,
        }
    }
}
