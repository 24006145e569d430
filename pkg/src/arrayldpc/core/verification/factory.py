"""Factory for creating template verifier instances."""

import logging
from typing import Any, Optional, Union

from arrayldpc.core.interfaces import ConfigurationError
from arrayldpc.core.verification.base import BaseTemplateVerifier
from arrayldpc.core.verification.codeword_verifier import CodewordTemplateVerifier
from arrayldpc.core.verification.stopping_verifier import StoppingSetTemplateVerifier
from arrayldpc.models.config import ArrayLDPCConfig
from arrayldpc.models.result import VerificationMode

logger = logging.getLogger(__name__)


class VerifierFactory:
    """Factory for creating the verifier that matches a verification mode."""

    @staticmethod
    def create_verifier(
        mode: Union[str, VerificationMode] = VerificationMode.CODEWORD,
        config: Optional[dict[str, Any]] = None,
    ) -> BaseTemplateVerifier:
        """Create a verifier instance.

        Args:
            mode: 'codeword' or 'stopping'
            config: Configuration dictionary (sweep_max, workers)

        Raises:
            ConfigurationError: If the mode is unknown
        """
        try:
            mode = VerificationMode(mode)
        except ValueError as e:
            raise ConfigurationError(f"Unknown verification mode: {mode}") from e

        if mode == VerificationMode.CODEWORD:
            return CodewordTemplateVerifier(config)
        return StoppingSetTemplateVerifier(config)

    @staticmethod
    def create_from_config(
        config: ArrayLDPCConfig, mode: Union[str, VerificationMode] = VerificationMode.CODEWORD
    ) -> BaseTemplateVerifier:
        """Create a verifier from the [verify] section of the application config."""
        logger.debug(f"Creating {mode} verifier from config: {config.verify}")
        return VerifierFactory.create_verifier(mode, config.verify.model_dump())

    @staticmethod
    def get_available_modes() -> list[str]:
        return [m.value for m in VerificationMode]
