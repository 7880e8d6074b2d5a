from .version import __version__

__description__ = (
    "Exact structure constants, contractions and induced Lie algebras for "
    "Filippov n-Lie algebras."
)

DEFAULT_CONFIG_PATH = "config.toml"
