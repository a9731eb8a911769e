"""
strongchordal: strongly chordal graphs through compatible subtree
representations.

The package builds compatible tree representations from strong
elimination orders, reads strong elimination orders back off compatible
representations in linear time, and cross-checks every characterization
(simple vertices, elimination orders, the overshadow relation and the
cycle definition) against brute-force oracles on small graphs.

Library modules only log; handlers are configured by the command-line
front end (strongchordal.cli).
"""
import logging

from .config import Config

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

__all__ = ['Config']
