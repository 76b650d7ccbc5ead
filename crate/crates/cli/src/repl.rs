//! Interactive session applying Hurwitz moves one at a time.

use std::io::{self, BufRead, Write};

use blf_core::{CycleSystem, Move};

use crate::parse::serialize;

pub const HELP: &str = "commands: show, data, swapl I, swapr I, rotf, rotb, \
global M11 M12 M21 M22, undo, save PATH, help, quit";

pub struct Session {
    history: Vec<CycleSystem>,
    log: Vec<Move>,
}

impl Session {
    pub fn new(start: CycleSystem) -> Self {
        Session {
            history: vec![start],
            log: Vec::new(),
        }
    }

    pub fn current(&self) -> &CycleSystem {
        self.history.last().expect("history is never empty")
    }

    /// Moves applied since the start, minus undone ones.
    pub fn log(&self) -> &[Move] {
        &self.log
    }

    fn data_line(&self) -> String {
        match self.current().boundary_data() {
            Ok(d) => format!("(eps, k) = {d}"),
            Err(e) => format!("not a cycle system: {e}"),
        }
    }

    fn status(&self) -> String {
        format!("{}\n{}", serialize(self.current()), self.data_line())
    }

    /// Runs one command line. `Ok(None)` means quit.
    pub fn execute(&mut self, line: &str) -> Result<Option<String>, String> {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            [] => Ok(Some(String::new())),
            ["quit"] | ["exit"] => Ok(None),
            ["help"] => Ok(Some(HELP.to_string())),
            ["show"] => Ok(Some(self.status())),
            ["data"] => Ok(Some(self.data_line())),
            ["undo"] => {
                if self.history.len() == 1 {
                    return Err("nothing to undo".into());
                }
                self.history.pop();
                self.log.pop();
                Ok(Some(self.status()))
            }
            ["save", path] => {
                std::fs::write(path, serialize(self.current()) + "\n")
                    .map_err(|e| format!("cannot write {path}: {e}"))?;
                Ok(Some(format!("saved to {path}\n{}", self.status())))
            }
            _ => {
                let m: Move = line.trim().parse().map_err(|e| format!("{e}; {HELP}"))?;
                let next = self.current().apply_move(&m).map_err(|e| e.to_string())?;
                self.history.push(next);
                self.log.push(m);
                Ok(Some(self.status()))
            }
        }
    }
}

/// Reads commands until `quit` or end of input.
pub fn run(start: CycleSystem, input: &mut dyn BufRead, out: &mut dyn Write) -> io::Result<()> {
    let mut session = Session::new(start);
    writeln!(out, "{}", session.status())?;
    let mut line = String::new();
    loop {
        write!(out, "> ")?;
        out.flush()?;
        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(());
        }
        match session.execute(&line) {
            Ok(Some(text)) if text.is_empty() => {}
            Ok(Some(text)) => writeln!(out, "{text}")?,
            Ok(None) => return Ok(()),
            Err(e) => writeln!(out, "error: {e}")?,
        }
    }
}
