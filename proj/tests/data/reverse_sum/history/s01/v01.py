x = input()
print("Reverse: {}".format(x[::-1]))
print("Sum: {}".format(int(x) + int(x[::-1])))
