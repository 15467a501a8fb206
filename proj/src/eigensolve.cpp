namespace macdual {}
