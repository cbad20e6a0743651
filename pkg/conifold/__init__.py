# resolved conifold package
