"""Grundy numbers of complements of bipartite graphs."""
