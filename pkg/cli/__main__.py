from .dispatch import main

main()
