//! Files, reports and the `sesqui` command-line tool on top of
//! [`sesqui_core`].

use std::path::{Path, PathBuf};

pub mod cli;
pub mod formats;
pub mod render;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}line {line}: {message}", .file.as_ref().map(|p| format!("{}: ", p.display())).unwrap_or_default())]
    Parse { file: Option<PathBuf>, line: usize, message: String },
}

impl FileError {
    pub fn parse(line: usize, message: impl ToString) -> Self {
        FileError::Parse { file: None, line, message: message.to_string() }
    }

    pub fn in_file(self, path: &Path) -> Self {
        match self {
            FileError::Parse { line, message, .. } => {
                FileError::Parse { file: Some(path.to_path_buf()), line, message }
            }
            io => io,
        }
    }
}
