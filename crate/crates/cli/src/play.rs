//! Interactive play against the exact engine.

use std::io::{BufRead, Write};

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;

use ae_core::{GameState, Hypergraph, LastPlayer, Player, Solver};

/// One pick with the engine's evaluation of the position before and after
/// it (the winner under perfect play from that point).
#[derive(Clone, Debug, Serialize)]
pub struct TranscriptMove {
    pub player: String,
    pub vertex: String,
    pub value_before: String,
    pub value_after: String,
}

/// A finished game: the picks in order and the winner by the filled-edge
/// rule.
#[derive(Clone, Debug, Serialize)]
pub struct Transcript {
    pub moves: Vec<TranscriptMove>,
    pub winner: String,
}

impl Transcript {
    /// Replays the picks through the rules alone (no engine) and returns
    /// the winner they produce.
    pub fn replay_winner(&self, h: &Hypergraph, names: &[String]) -> Result<Player> {
        let mut avoider_mask = 0u64;
        let mut expected: Option<String> = None;
        for m in &self.moves {
            if let Some(prev) = &expected {
                if &m.player == prev {
                    bail!("players do not alternate");
                }
            }
            expected = Some(m.player.clone());
            let v = names
                .iter()
                .position(|n| n == &m.vertex)
                .ok_or_else(|| anyhow!("unknown vertex {:?} in transcript", m.vertex))?;
            if m.player == Player::Avoider.to_string() {
                avoider_mask |= 1u64 << v;
            }
        }
        let filled = h.edges().iter().any(|e| e.mask() & !avoider_mask == 0);
        Ok(if filled { Player::Enforcer } else { Player::Avoider })
    }
}

/// Runs one game on `h`: the human plays `human`, the engine the other
/// player, with `last` to move last. Illegal or unknown picks are refused
/// with a reprompt. Returns the annotated transcript.
pub fn run_play<R: BufRead, W: Write>(
    h: &Hypergraph,
    names: &[String],
    human: Player,
    last: LastPlayer,
    input: &mut R,
    out: &mut W,
) -> Result<Transcript> {
    let mut solver = Solver::new(h, last)?;
    let n = h.vertex_count();
    let full = (1u64 << n) - 1;
    let mut state = GameState::initial(solver.first_player());
    writeln!(
        out,
        "playing on {n} vertices; you are {human}, {} moves last, {} starts",
        last.player(),
        solver.first_player()
    )?;
    let mut moves = Vec::new();
    while state.avoider_mask | state.enforcer_mask != full {
        let free = full & !(state.avoider_mask | state.enforcer_mask);
        let value_before = solver.solve_position(&state)?;
        let pick = if state.to_move == human {
            prompt_pick(h, names, &state, free, input, out)?
        } else {
            let v = solver.best_move(&state)?;
            writeln!(out, "engine ({}) picks {}", state.to_move, names[v])?;
            v
        };
        let mover = state.to_move;
        match mover {
            Player::Avoider => state.avoider_mask |= 1u64 << pick,
            Player::Enforcer => state.enforcer_mask |= 1u64 << pick,
        }
        state.to_move = mover.other();
        let value_after = solver.solve_position(&state)?;
        moves.push(TranscriptMove {
            player: mover.to_string(),
            vertex: names[pick].clone(),
            value_before: value_before.to_string(),
            value_after: value_after.to_string(),
        });
    }
    let filled = h.edges().iter().any(|e| e.mask() & !state.avoider_mask == 0);
    let winner = if filled { Player::Enforcer } else { Player::Avoider };
    writeln!(out, "game over: {winner} wins")?;
    Ok(Transcript { moves, winner: winner.to_string() })
}

fn prompt_pick<R: BufRead, W: Write>(
    h: &Hypergraph,
    names: &[String],
    state: &GameState,
    free: u64,
    input: &mut R,
    out: &mut W,
) -> Result<usize> {
    let remaining: Vec<&str> = (0..h.vertex_count())
        .filter(|&v| free & (1u64 << v) != 0)
        .map(|v| names[v].as_str())
        .collect();
    writeln!(out, "remaining: {}", remaining.join(" "))?;
    // an edge is live while Enforcer holds none of it
    let live: Vec<String> = h
        .edges()
        .iter()
        .filter(|e| e.mask() & state.enforcer_mask == 0)
        .map(|e| {
            let ns: Vec<&str> = e.members().iter().map(|&v| names[v].as_str()).collect();
            ns.join(" ")
        })
        .collect();
    writeln!(out, "live edges: {}", if live.is_empty() { "none".into() } else { live.join(", ") })?;
    loop {
        write!(out, "your pick ({}): ", state.to_move)?;
        out.flush()?;
        let mut line = String::new();
        let read = input.read_line(&mut line).context("reading your pick")?;
        if read == 0 {
            bail!("input ended before the game did");
        }
        let name = line.trim();
        match names.iter().position(|n| n == name) {
            Some(v) if free & (1u64 << v) != 0 => return Ok(v),
            Some(_) => writeln!(out, "{name} is already taken; pick again")?,
            None => writeln!(out, "no vertex named {name:?}; pick again")?,
        }
    }
}
