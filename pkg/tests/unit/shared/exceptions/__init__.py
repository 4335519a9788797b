"""Shared exceptions tests package.""" 