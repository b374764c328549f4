/// Environment variable overriding [`Limits::max_order`].
pub const MAX_ORDER_ENV: &str = "PARKGRAM_MAX_ORDER";
/// Environment variable overriding [`Limits::max_enum_len`].
pub const MAX_ENUM_ENV: &str = "PARKGRAM_MAX_ENUM";

/// Work bounds for the exponential operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by `derive_n` and everything built on it.
    pub max_order: usize,
    /// Largest sequence length accepted by brute-force enumeration.
    pub max_enum_len: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_order: 12,
        max_enum_len: 8,
    };

    /// Defaults, overridden by `PARKGRAM_MAX_ORDER` / `PARKGRAM_MAX_ENUM` when
    /// they hold valid integers.
    pub fn from_env() -> Self {
        let read = |key: &str, fallback: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(fallback)
        };
        Limits {
            max_order: read(MAX_ORDER_ENV, Self::DEFAULT.max_order),
            max_enum_len: read(MAX_ENUM_ENV, Self::DEFAULT.max_enum_len),
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
