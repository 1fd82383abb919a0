"""
HTTP surface for the sketch pipeline.
"""

from .views import sketch_router

__all__ = ['sketch_router']
