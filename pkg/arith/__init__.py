# exact arithmetic package
