# truncated series package
