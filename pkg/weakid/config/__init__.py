"""
Configuration module for weakid
"""

from .settings import CertifyConfig, CliConfig, Config, OutputConfig, RewriteConfig

__all__ = ["Config", "RewriteConfig", "CertifyConfig", "OutputConfig", "CliConfig"]
