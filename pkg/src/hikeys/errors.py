"""Exception taxonomy shared across the package."""


class HikeysError(Exception):
    """Base class for package-specific failures."""


class ConfigError(HikeysError):
    """Invalid configuration value (unknown hash id, bad width, ...)."""


class ProtocolError(HikeysError):
    """A protocol flow could not complete as specified."""


class DeliveryError(ProtocolError):
    """No usable route to a recipient."""


class ScenarioError(HikeysError):
    """Scenario file invalid or inconsistent with the simulated network."""


class CryptoError(HikeysError):
    """Provider-level failure (malformed key, unknown recipient)."""


class WrongKeyError(CryptoError):
    """Decryption attempted with key material of the wrong kind, scope, or value."""


class StaleKeyError(CryptoError):
    """Decryption attempted with key material of a different epoch."""


class CertificateError(CryptoError):
    """Certificate did not verify against the scenario root."""
