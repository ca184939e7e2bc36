pub mod error;
pub mod forms;
pub mod linalg;
pub mod pushforward;
pub mod roots;
pub mod scalars;
