"""Error types shared by every g2p module.

Each error carries a stable ``code`` (its class name) so batch output can
report ``ERROR:<code>`` without exposing Python tracebacks.
"""


class G2PError(Exception):
    """Base class for all g2p failures."""

    @property
    def code(self) -> str:
        return type(self).__name__


class UnknownGrapheme(G2PError):
    def __init__(self, char: str):
        super().__init__(f"Unknown grapheme: {char!r}")
        self.char = char


class MissingHarmonyContext(G2PError):
    def __init__(self, meta: str):
        super().__init__(f"No vowel in left context to resolve {meta!r}")
        self.meta = meta


class EmptyToken(G2PError):
    def __init__(self, surface: str = ""):
        super().__init__(f"Token is empty after normalization: {surface!r}")
        self.surface = surface


class MissingFile(G2PError, FileNotFoundError):
    def __init__(self, path: str):
        super().__init__(f"Lexicon file not found: {path}")
        self.path = path


class ParseError(G2PError):
    def __init__(self, path: str, line: int, reason: str):
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason


class InvalidSampaToken(G2PError):
    def __init__(self, token: str, where: str = ""):
        msg = f"Invalid SAMPA token {token!r}"
        if where:
            msg += f" ({where})"
        super().__init__(msg)
        self.token = token


class UnresolvedSoftG(G2PError):
    def __init__(self, tokens: str):
        super().__init__(f"No soft-g rule matches in /{tokens}/")
        self.tokens = tokens


class NoVowel(G2PError):
    def __init__(self, tokens: str):
        super().__init__(f"Cannot syllabify a pron without vowels: /{tokens}/")
        self.tokens = tokens
