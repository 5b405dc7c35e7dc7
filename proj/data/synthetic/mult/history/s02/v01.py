m, n = map(int, input().split())
print (m-n)
